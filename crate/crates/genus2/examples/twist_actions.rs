//! Mapping classes as surface-group automorphisms: evaluating twist
//! words, the defining relations of the twist generators, and equality up
//! to isotopy (inner automorphisms).

use genus2::mcg::{relation_checks, BaseCurveId, Curve, MappingClass};
use genus2::McgWord;

fn main() {
    // the full relation suite for the generators t1..t5, T_sigma0
    let mut all = true;
    for (name, holds) in relation_checks() {
        all &= holds;
        println!("{}  {name}", if holds { "ok  " } else { "FAIL" });
    }
    assert!(all);

    // evaluating a twist word (rightmost letter acts first)
    let w: McgWord = "1 2 1".parse().unwrap();
    let m = MappingClass::evaluate(&w).unwrap();
    println!("\n(t1 t2 t1)(a1) = {}", m.images()[0]);

    // equality is tested up to inner automorphisms: a composite can move
    // every generator and still be isotopically trivial
    let torsion: McgWord = "1 2 3 4 5 ".repeat(6).parse().unwrap();
    let m = MappingClass::evaluate(&torsion).unwrap();
    println!(
        "(t1 t2 t3 t4 t5)^6 trivial: {} (witness: inner conjugation)",
        m.is_isotopically_trivial()
    );

    // twists along conjugated curves: T_{phi(c)} = phi T_c phi^-1
    let phi: McgWord = "4 2'".parse().unwrap();
    let curve = Curve::new(phi.clone(), BaseCurveId::C3);
    let lhs = MappingClass::twist_of(&curve).unwrap();
    let conj = MappingClass::evaluate(&phi).unwrap();
    let rhs = conj
        .compose(&MappingClass::base_twist(BaseCurveId::C3, 1))
        .unwrap()
        .compose(&conj.invert())
        .unwrap();
    println!("T_(4 2')(c3) = (4 2') T_c3 (4 2')^-1: {}", lhs.equal(&rhs));

    // the braid fact that moves curves along the chain: (t1 t2)(c1) = c2
    let moved = Curve::new("1 2".parse().unwrap(), BaseCurveId::C1);
    println!(
        "(t1 t2)(c1) isotopic to c2: {}",
        moved.isotopic(&Curve::base(BaseCurveId::C2)).unwrap()
    );
}
