//! Rewriting positive factorizations: Hurwitz moves, cyclic rotation,
//! global conjugation, fiber sums, and the 2-chain substitution, each
//! re-verified after the rewrite.

use genus2::factorization::{chain_factorization, HurwitzDirection};
use genus2::mcg::{BaseCurveId, Curve};
use genus2::McgWord;

fn main() -> genus2::Result<()> {
    let f = chain_factorization("1234554321", 2)?;
    println!("start: type {}, verified {}", f.type_of()?, f.verify_identity()?.verified);

    // a Hurwitz move permutes adjacent twists, conjugating one of them;
    // the composite mapping class and the type are unchanged
    let g = f.hurwitz_move(3, HurwitzDirection::Forward)?;
    println!(
        "after hurwitz(3, forward): type {}, verified {}",
        g.type_of()?,
        g.verify_identity()?.verified
    );
    println!("  token 3 is now: {}", g.tokens[3].curve);

    // cyclic rotation: an identity factorization stays an identity
    let g = f.cyclic_rotate(7);
    println!("after rotate(7): verified {}", g.verify_identity()?.verified);

    // global conjugation by any mapping class word
    let phi: McgWord = "4 1' s".parse().unwrap();
    let g = f.global_conjugate(&phi);
    println!(
        "after conjugating by `{phi}`: type {}, verified {}",
        g.type_of()?,
        g.verify_identity()?.verified
    );

    // twisted fiber sum: types add
    let h = chain_factorization("12345", 6)?;
    let sum = f.fiber_sum(&h, &phi)?;
    println!(
        "fiber sum (20,0) + (30,0): type {}, verified {}",
        sum.type_of()?,
        sum.verify_identity()?.verified
    );

    // 2-chain substitution: a (t_a t_b)^6 block for adjacent curves equals
    // one separating twist, so the type changes by (-12, +1); the relation
    // is re-proved by mapping-class equality before the splice
    let block = chain_factorization("12", 6)?; // (t1 t2)^6
    let sigma0 = Curve::base(BaseCurveId::Sigma0);
    let substituted = block.chain_substitute(0, sigma0)?;
    println!(
        "2-chain substitution: {} -> {} ({} tokens -> {})",
        block.type_of()?,
        substituted.type_of()?,
        block.len(),
        substituted.len()
    );
    Ok(())
}
