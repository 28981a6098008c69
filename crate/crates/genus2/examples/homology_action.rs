//! The symplectic action on H1(Sigma_2; Z): Picard-Lefschetz
//! transvections, the separating test, and first homology of a
//! fibration's total space by Smith normal form.

use genus2::factorization::chain_factorization;
use genus2::homology::{
    class_of_curve, h1_of_total_space, pairing, transvection, HomologyClass,
};
use genus2::mcg::{BaseCurveId, Curve};

fn main() {
    // the chain curve classes in the basis (a1, b1, a2, b2)
    for base in BaseCurveId::ALL {
        let c = Curve::base(base);
        println!(
            "[{}] = {}  separating: {}",
            base.symbol(),
            class_of_curve(&c),
            c.is_separating().unwrap()
        );
    }

    // consecutive chain curves pair to +-1, distant ones to 0
    let c1 = class_of_curve(&Curve::base(BaseCurveId::C1));
    let c2 = class_of_curve(&Curve::base(BaseCurveId::C2));
    let c3 = class_of_curve(&Curve::base(BaseCurveId::C3));
    println!("<c1,c2> = {}, <c1,c3> = {}", pairing(c1, c2), pairing(c1, c3));

    // a twist acts on homology as the transvection x -> x + <x,c> c
    let t = transvection(c2);
    println!("transvection of [c2] is symplectic: {}", t.is_symplectic());
    println!("t_c2 [c1] = {}", t.apply(c1));

    // conjugated curves: the class transports along the twist word
    let pushed = Curve::base(BaseCurveId::C1).pushed(&"2".parse().unwrap());
    println!("[t2(c1)] = {}", class_of_curve(&pushed));

    // H1 of the total space: the classes of the vanishing cycles span a
    // sublattice; the quotient is read off the Smith normal form
    let chain30 = chain_factorization("12345", 6).unwrap();
    println!("H1 of the (30,0) chain word: {}", chain30.h1());
    let chain20 = chain_factorization("1234554321", 2).unwrap();
    println!("H1 of the (20,0) chain word: {}", chain20.h1());

    // direct span computation
    let h1 = h1_of_total_space(&[c1, c3, HomologyClass([0, 2, 0, 0])]);
    println!("H1 from span {{[c1], [c3], 2 b1}}: {h1}");
}
