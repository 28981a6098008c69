//! Load the shipped catalog and re-verify it: every non-stub entry is
//! checked as an identity factorization of its claimed type, and the
//! homology facts pinning the figure curves are re-derived.

use genus2::catalog::{load_catalog, EntryStatus};
use genus2::homology::class_of_curve;

fn main() -> genus2::Result<()> {
    let catalog = load_catalog()?;
    println!("{:<12} {:>8} {:<10} provenance", "id", "type", "status");
    for entry in &catalog.entries {
        let status = match entry.status {
            EntryStatus::Verified => "verified",
            EntryStatus::Script => "script",
            EntryStatus::Stub => "stub",
        };
        println!(
            "{:<12} {:>8} {:<10} {}",
            entry.id,
            entry.claimed_type.to_string(),
            status,
            entry.provenance
        );
    }

    // the figure curves and their homology classes
    println!();
    for name in ["B", "C", "D", "E", "F", "G", "H"] {
        let curve = catalog.curve(name)?;
        println!("[{name}] = {}", class_of_curve(&curve));
    }
    for name in ["sigma", "alpha", "gamma", "theta", "delta", "omega"] {
        let curve = catalog.curve(name)?;
        println!("{name}: separating {}", curve.is_separating()?);
    }

    // a catalog word round-trips through its verification report
    let w = catalog.word("W")?;
    let report = w.verify_identity()?;
    println!("\nW: {report}");
    Ok(())
}
