//! The geography planner: classify lattice points (chi_h, c1^2) against
//! the bounding lines and emit symbolic construction recipes, then
//! materialize one into a verified factorization.

use genus2::catalog::{load_catalog, materialize};
use genus2::geography::{plan, region_check, GeographyPoint};

fn main() -> genus2::Result<()> {
    let points = [
        (2i64, 8i64),   // the (10,10) construction
        (3, 0),         // chain-word territory
        (4, 17),        // on the BK(0) line
        (6, 30),        // on the 5.5 ceiling
        (10, 55),       // M(1), above the ceiling: planned via BuildM
        (1, 10),        // violates the upper bound
    ];
    for (x, y) in points {
        let p = GeographyPoint { x, y };
        print!("({x:>2},{y:>2})  {:<22}", region_check(p, false).to_string());
        match plan(p) {
            Ok(recipe) => println!("{recipe}  -> predicted {}", recipe.predicted_type()?),
            Err(e) => println!("no recipe: {e}"),
        }
    }

    // materialize the smallest plan into an actual verified factorization
    let catalog = load_catalog()?;
    let p = GeographyPoint { x: 3, y: 0 };
    let recipe = plan(p)?;
    let fact = materialize(&catalog, &recipe)?;
    let report = fact.verify_identity()?;
    println!(
        "\nmaterialized {recipe}: type {}, verified {}",
        report.fibration_type, report.verified
    );
    Ok(())
}
