//! The surface-group word problem: free and Dehn reduction, conjugacy
//! witnesses, and the relator that makes the genus-2 surface group a
//! one-relator group with a solvable word problem.

use genus2::words::{conjugacy_witness, words_equal, SurfaceWord, RELATOR};

fn main() {
    // free reduction: a1 b1 b1' a1' collapses to the empty word
    let w = SurfaceWord::reduce(&[1, 2, -2, -1]);
    println!("a1 b1 b1' a1'  ->  `{w}` (len {})", w.len());

    // Dehn reduction: the relator itself is trivial in the group
    let r = SurfaceWord::reduce(&RELATOR);
    println!("[a1,b1][a2,b2] ->  `{r}` (empty: {})", r.is_empty());

    // a word containing more than half the relator is rewritten with the
    // shorter complementary side
    let long = SurfaceWord::reduce(&[1, 2, -1, -2, 3, 4]);
    println!("a1 b1 a1' b1' a2 b2  ->  `{long}` (len {})", long.len());

    // equality in the group vs literal equality of letters
    let x = SurfaceWord::reduce(&[2, 1, -2]);
    let a1 = SurfaceWord::generator(1);
    println!(
        "b1 a1 b1' vs a1: group-equal {}, conjugate via {:?}",
        words_equal(&x, &a1),
        conjugacy_witness(&x, &a1).map(|c| c.to_string()),
    );

    // cyclic reduction splits a word into conjugator and core
    let (conj, core) = SurfaceWord::reduce(&[3, 1, 2, -3]).cyclic_reduce();
    println!("a2 a1 b1 a2' = ({conj}) ({core}) ({conj})^-1");

    // abelianization: exponent sums in (a1, b1, a2, b2)
    println!(
        "abelianization of a1 b1 a1 b2' = {:?}",
        SurfaceWord::reduce(&[1, 2, 1, -4]).abelianization()
    );
}
