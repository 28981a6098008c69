//! Text map of the geography region: each lattice column chi_h lists how
//! its c1^2 values classify against the Noether line, the BK line, the
//! 5.5-ceiling of the constructive theorems, and the upper bound.

use genus2::geography::{bk_t_line, ceiling_line, region_check, s_line, GeographyPoint, RegionClass};

fn main() {
    let xmax = 10i64;
    println!("legend: . inadmissible, a below-BK, B on-BK, c BK..5.5x-3, ? 5.5x-3..6x-3");
    for y in (-8..=6 * xmax - 3).rev() {
        let mut row = String::new();
        for x in 0..=xmax {
            let ch = match region_check(GeographyPoint { x, y }, false) {
                RegionClass::ViolatesNoether | RegionClass::ViolatesUpper => '.',
                RegionClass::AdmissibleBelowBk => 'a',
                RegionClass::OnBk => 'B',
                RegionClass::BetweenBkAndCeiling => 'c',
                RegionClass::BetweenCeilingAndUpper => '?',
            };
            row.push(ch);
            row.push(' ');
        }
        println!("{y:>4} | {row}");
    }
    println!("       {}", (0..=xmax).map(|x| x.to_string()).collect::<Vec<_>>().join(" "));

    // the bounding lines themselves, evaluated on the column chi_h = 6
    let x = 6;
    println!("\nat chi_h = {x}:");
    println!("  Noether (s=0) line: c1^2 = {}", s_line(0).y_at(x));
    println!("  BK (t=0) line:      c1^2 = {}", bk_t_line(0).y_at(x));
    println!("  5.5-ceiling:        c1^2 = {}", ceiling_line().y_at(x));
}
