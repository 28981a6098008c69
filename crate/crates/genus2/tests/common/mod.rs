//! Shared helpers for the integration-test targets: deterministic example
//! factorizations, a proptest strategy for mapping-class words, and the
//! property bodies reused by both the property suite and the acceptance
//! gate.

#![allow(dead_code)]

use genus2::factorization::{chain_factorization, Factorization, FibrationType, HurwitzDirection};
use genus2::homology::{smith_diagonal, transvection, AbelianGroupShape, HomologyClass};
use genus2::mcg::{BaseCurveId, Curve, McgWord, TwistLetter};
use proptest::prelude::*;

pub fn chain20() -> Factorization {
    chain_factorization("1234554321", 2).unwrap()
}

pub fn chain30() -> Factorization {
    chain_factorization("12345", 6).unwrap()
}

pub fn identity_word(choice: u8) -> Factorization {
    if choice % 2 == 0 {
        chain20()
    } else {
        chain30()
    }
}

pub fn twist_letter() -> impl Strategy<Value = TwistLetter> {
    (0usize..6, prop::bool::ANY).prop_map(|(i, neg)| TwistLetter {
        base: BaseCurveId::ALL[i],
        sign: if neg { -1 } else { 1 },
    })
}

pub fn mcg_word(max_len: usize) -> impl Strategy<Value = McgWord> {
    prop::collection::vec(twist_letter(), 0..=max_len).prop_map(McgWord)
}

// ---- property bodies -------------------------------------------------

pub fn check_hurwitz_preserves(choice: u8, pos: usize, forward: bool) -> Result<(), String> {
    let f = identity_word(choice);
    let i = pos % (f.len() - 1);
    let dir = if forward {
        HurwitzDirection::Forward
    } else {
        HurwitzDirection::Backward
    };
    let g = f.hurwitz_move(i, dir).map_err(|e| e.to_string())?;
    let report = g.verify_identity().map_err(|e| e.to_string())?;
    if !report.verified {
        return Err(format!("hurwitz broke identity: {report}"));
    }
    let (tf, tg) = (
        f.type_of().map_err(|e| e.to_string())?,
        g.type_of().map_err(|e| e.to_string())?,
    );
    if tf != tg {
        return Err(format!("type changed: {tf} -> {tg}"));
    }
    Ok(())
}

pub fn check_rotation_preserves(choice: u8, k: usize) -> Result<(), String> {
    let f = identity_word(choice);
    let g = f.cyclic_rotate(k);
    if !g.verify_identity().map_err(|e| e.to_string())?.verified {
        return Err(format!("rotation by {k} broke identity"));
    }
    if g.type_of().map_err(|e| e.to_string())? != f.type_of().map_err(|e| e.to_string())? {
        return Err("rotation changed type".into());
    }
    Ok(())
}

pub fn check_conjugation_preserves(choice: u8, phi: &McgWord) -> Result<(), String> {
    let f = identity_word(choice);
    let g = f.global_conjugate(phi);
    if !g.verify_identity().map_err(|e| e.to_string())?.verified {
        return Err(format!("conjugation by {phi} broke identity"));
    }
    if g.type_of().map_err(|e| e.to_string())? != f.type_of().map_err(|e| e.to_string())? {
        return Err("conjugation changed type".into());
    }
    Ok(())
}

pub fn check_fiber_sum_additivity(a_choice: u8, b_choice: u8, phi: &McgWord) -> Result<(), String> {
    let a = identity_word(a_choice);
    let b = identity_word(b_choice);
    let c = a.fiber_sum(&b, phi).map_err(|e| e.to_string())?;
    let want = a.type_of().map_err(|e| e.to_string())? + b.type_of().map_err(|e| e.to_string())?;
    let got = c.type_of().map_err(|e| e.to_string())?;
    if got != want {
        return Err(format!("fiber sum type {got}, expected {want}"));
    }
    if (got.n + 2 * got.s) % 10 != 0 {
        return Err(format!("verified type {got} fails n+2s = 0 mod 10"));
    }
    if !c.ledger.minimal_by_fiber_sum {
        return Err("fiber sum did not record minimality".into());
    }
    Ok(())
}

pub fn check_chain_delta(phi: &McgWord) -> Result<(), String> {
    let block = chain_factorization("12", 6).unwrap().global_conjugate(phi);
    let delta = Curve::base(BaseCurveId::Sigma0).pushed(phi);
    let out = block.chain_substitute(0, delta).map_err(|e| e.to_string())?;
    if out.len() + 11 != block.len() {
        return Err("chain substitution must drop 11 tokens".into());
    }
    let (tb, to) = (
        block.type_of().map_err(|e| e.to_string())?,
        out.type_of().map_err(|e| e.to_string())?,
    );
    if (to.n as i64 - tb.n as i64, to.s as i64 - tb.s as i64) != (-12, 1) {
        return Err(format!("chain delta wrong: {tb} -> {to}"));
    }
    Ok(())
}

/// Lantern substitution delta, parameterized over a verified lantern
/// instance (four positive twists = three positive twists) embedded in a
/// verified factorization, conjugated by a random phi.
pub fn check_lantern_delta(
    host: &Factorization,
    start: usize,
    replacement: &[Curve; 3],
    phi: &McgWord,
) -> Result<(), String> {
    let f = host.global_conjugate(phi);
    let rep = [
        replacement[0].pushed(phi),
        replacement[1].pushed(phi),
        replacement[2].pushed(phi),
    ];
    let out = f.lantern_substitute(start, rep).map_err(|e| e.to_string())?;
    if out.len() + 1 != f.len() {
        return Err("lantern substitution must drop one token".into());
    }
    let (tf, to) = (
        f.type_of().map_err(|e| e.to_string())?,
        out.type_of().map_err(|e| e.to_string())?,
    );
    if (to.n as i64 - tf.n as i64, to.s as i64 - tf.s as i64) != (-2, 1) {
        return Err(format!("lantern delta wrong: {tf} -> {to}"));
    }
    Ok(())
}

pub fn check_transvection_symplectic(class: [i64; 4]) -> Result<(), String> {
    let m = transvection(HomologyClass(class));
    if !m.is_symplectic() {
        return Err(format!("transvection of {class:?} is not symplectic"));
    }
    Ok(())
}

/// Brute-force oracle for SNF: the rank of the matrix over GF(p) must be
/// the number of diagonal entries not divisible by p, and the rational
/// rank the number of nonzero entries.
pub fn check_snf_against_modular_rank(m: Vec<Vec<i64>>) -> Result<(), String> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let diag = smith_diagonal(m.clone());
    let rank_q = rank_mod(&m, 0);
    let nonzero = diag.iter().filter(|&&d| d != 0).count();
    if rank_q != nonzero {
        return Err(format!("rational rank {rank_q} vs {nonzero} nonzero SNF entries"));
    }
    for p in [2i64, 3, 5, 7, 11, 13] {
        let want = diag.iter().filter(|&&d| d % p != 0).count();
        let got = rank_mod(&m, p);
        if got != want {
            return Err(format!(
                "rank mod {p}: {got}, SNF predicts {want} (diag {diag:?}, dims {rows}x{cols})"
            ));
        }
    }
    Ok(())
}

/// Gaussian elimination rank over GF(p), or over Q when p == 0 (using
/// exact fraction-free elimination on i128).
fn rank_mod(m: &[Vec<i64>], p: i64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| {
                    if p == 0 {
                        i128::from(x)
                    } else {
                        i128::from(x.rem_euclid(p))
                    }
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in 0..rows {
            if r == rank || a[r][c] == 0 {
                continue;
            }
            let (num, den) = (a[r][c], a[rank][c]);
            for k in 0..cols {
                let v = a[r][k] * den - a[rank][k] * num;
                a[r][k] = if p == 0 { v } else { v.rem_euclid(i128::from(p)) };
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Closed-form identities on all admissible types with n + s <= bound.
pub fn check_invariant_identities(bound: u32) -> Result<(), String> {
    for n in 0..=bound {
        for s in 0..=(bound - n) {
            let t = FibrationType { n, s };
            match genus2::geography::invariants_from_type(t) {
                Ok(inv) => {
                    if inv.c1sq != 2 * inv.e + 3 * inv.sigma {
                        return Err(format!("{t}: c1^2 != 2e + 3sigma"));
                    }
                    if 4 * inv.chi_h != inv.e + inv.sigma {
                        return Err(format!("{t}: 4chi_h != e + sigma"));
                    }
                    if inv.m != i64::from(n + 2 * s) / 10 {
                        return Err(format!("{t}: wrong m"));
                    }
                }
                Err(_) => {
                    if (n + 2 * s) % 10 == 0 {
                        return Err(format!("{t}: admissible type rejected"));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn h1_is(f: &Factorization, want: AbelianGroupShape) -> Result<(), String> {
    let got = f.h1();
    if got == want {
        Ok(())
    } else {
        Err(format!("H1 = {got}, expected {want}"))
    }
}
