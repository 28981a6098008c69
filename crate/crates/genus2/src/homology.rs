//! The symplectic action on H1 of the genus-2 surface: Picard–Lefschetz
//! transvections, intersection pairing, separating tests, and first
//! homology of a fibration's total space via Smith normal form.
//!
//! Basis order is (a1, b1, a2, b2) with pairing `<ai, bi> = +1`. Curve
//! classes are only defined up to global sign (curves are unoriented);
//! every consumer here is sign-insensitive.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::mcg::{BaseCurveId, Curve, McgWord};
use crate::{Error, Result};

/// An integer class in H1(Sigma_2) in the ordered basis (a1, b1, a2, b2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct HomologyClass(pub [i64; 4]);

impl HomologyClass {
    pub const ZERO: HomologyClass = HomologyClass([0; 4]);

    pub fn basis(i: usize) -> Self {
        let mut v = [0i64; 4];
        v[i] = 1;
        HomologyClass(v)
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0; 4]
    }

    pub fn scale(self, k: i64) -> Self {
        HomologyClass(self.0.map(|x| x * k))
    }

    /// True when the classes agree up to global sign.
    pub fn same_up_to_sign(self, other: HomologyClass) -> bool {
        self == other || self == -other
    }
}

impl Add for HomologyClass {
    type Output = HomologyClass;
    fn add(self, rhs: Self) -> Self {
        HomologyClass([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
            self.0[3] + rhs.0[3],
        ])
    }
}

impl Sub for HomologyClass {
    type Output = HomologyClass;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for HomologyClass {
    type Output = HomologyClass;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl FromStr for HomologyClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `(p,q,r,s)`, got `{s}`")))?;
        let parts: Vec<i64> = inner
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse(format!("bad homology class `{s}`: {e}")))?;
        let arr: [i64; 4] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("homology class needs 4 entries: `{s}`")))?;
        Ok(HomologyClass(arr))
    }
}

/// Algebraic intersection number.
pub fn pairing(x: HomologyClass, y: HomologyClass) -> i64 {
    x.0[0] * y.0[1] - x.0[1] * y.0[0] + x.0[2] * y.0[3] - x.0[3] * y.0[2]
}

/// A 4x4 integer matrix preserving the symplectic form; columns are images
/// of the basis vectors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymplecticMatrix(pub [[i64; 4]; 4]);

impl SymplecticMatrix {
    pub fn identity() -> Self {
        let mut m = [[0i64; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        SymplecticMatrix(m)
    }

    pub fn apply(&self, x: HomologyClass) -> HomologyClass {
        let mut out = [0i64; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i] += self.0[i][j] * x.0[j];
            }
        }
        HomologyClass(out)
    }

    pub fn mul(&self, rhs: &SymplecticMatrix) -> SymplecticMatrix {
        let mut out = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    out[i][j] += self.0[i][k] * rhs.0[k][j];
                }
            }
        }
        SymplecticMatrix(out)
    }

    /// Check M^T J M = J for the standard form.
    pub fn is_symplectic(&self) -> bool {
        let e = |i: usize| self.apply(HomologyClass::basis(i));
        let want = |i: usize, j: usize| -> i64 {
            match (i, j) {
                (0, 1) | (2, 3) => 1,
                (1, 0) | (3, 2) => -1,
                _ => 0,
            }
        };
        (0..4).all(|i| (0..4).all(|j| pairing(e(i), e(j)) == want(i, j)))
    }
}

/// Picard–Lefschetz: the right-handed twist acts by x -> x + <x,c> c.
pub fn transvection(c: HomologyClass) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity();
    for j in 0..4 {
        let img = HomologyClass::basis(j) + c.scale(pairing(HomologyClass::basis(j), c));
        for i in 0..4 {
            m.0[i][j] = img.0[i];
        }
    }
    m
}

fn transvection_signed(c: HomologyClass, sign: i8) -> SymplecticMatrix {
    if sign >= 0 {
        transvection(c)
    } else {
        // inverse transvection: x -> x - <x,c> c
        let mut m = SymplecticMatrix::identity();
        for j in 0..4 {
            let img =
                HomologyClass::basis(j) - c.scale(pairing(HomologyClass::basis(j), c));
            for i in 0..4 {
                m.0[i][j] = img.0[i];
            }
        }
        m
    }
}

/// Homology class of a base curve (a chain-curve transcription: consecutive
/// chain classes pair to +-1, non-consecutive to 0; the separating curve is
/// null-homologous).
pub fn base_curve_class(base: BaseCurveId) -> HomologyClass {
    let w = base.curve_word();
    HomologyClass(w.abelianization())
}

/// The induced symplectic matrix of a twist word: the product of base
/// transvections in word order (the rightmost letter acts first, so its
/// matrix sits rightmost in the product).
pub fn homology_of_mcg_word(w: &McgWord) -> SymplecticMatrix {
    let mut acc = SymplecticMatrix::identity();
    for l in &w.0 {
        acc = acc.mul(&transvection_signed(base_curve_class(l.base), l.sign));
    }
    acc
}

/// Class of a curve: the conjugator's matrix applied to the base class.
pub fn class_of_curve(x: &Curve) -> HomologyClass {
    homology_of_mcg_word(&x.conjugator).apply(base_curve_class(x.base))
}

/// A curve is separating iff null-homologous.
pub fn is_separating(x: &Curve) -> bool {
    class_of_curve(x).is_zero()
}

/// Isomorphism type of a finitely generated abelian group: free rank plus
/// the divisibility chain of torsion divisors > 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroupShape {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroupShape {
    pub fn trivial() -> Self {
        AbelianGroupShape { rank: 0, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupShape { rank, torsion: Vec::new() }
    }
}

impl fmt::Display for AbelianGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Smith normal form diagonal of an integer matrix (rows x cols), by
/// fraction-free elimination. Returns the non-negative diagonal entries.
pub fn smith_diagonal(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut r0 = 0usize;
    let mut c0 = 0usize;
    while r0 < rows && c0 < cols {
        // find a nonzero pivot with least absolute value
        let mut pivot: Option<(usize, usize)> = None;
        for i in r0..rows {
            for j in c0..cols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(r0, pi);
        for row in m.iter_mut() {
            row.swap(c0, pj);
        }
        // clear the pivot row and column by Euclidean steps
        loop {
            let mut dirty = false;
            for i in (r0 + 1)..rows {
                if m[i][c0] != 0 {
                    let q = m[i][c0].div_euclid(m[r0][c0]);
                    for j in c0..cols {
                        m[i][j] -= q * m[r0][j];
                    }
                    if m[i][c0] != 0 {
                        m.swap(r0, i);
                        dirty = true;
                    }
                }
            }
            for j in (c0 + 1)..cols {
                if m[r0][j] != 0 {
                    let q = m[r0][j].div_euclid(m[r0][c0]);
                    for row in m.iter_mut().take(rows).skip(r0) {
                        row[j] -= q * row[c0];
                    }
                    if m[r0][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(c0, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(m[r0][c0].abs());
        r0 += 1;
        c0 += 1;
    }
    // enforce the divisibility chain d1 | d2 | ...
    let n = diag.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let a = diag[i];
            let b = diag[j];
            let g = gcd(a, b);
            diag[i] = g;
            diag[j] = if g == 0 { 0 } else { a / g * b };
        }
    }
    diag
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// First homology of the total space of a genus-2 fibration over S^2 with
/// the given vanishing-cycle classes: Z^4 modulo their span.
pub fn h1_of_total_space(classes: &[HomologyClass]) -> AbelianGroupShape {
    let m: Vec<Vec<i64>> = classes.iter().map(|c| c.0.to_vec()).collect();
    // SNF of the relation matrix (rows = relations into Z^4)
    let diag = smith_diagonal(transpose(&m, 4));
    let nonzero: Vec<i64> = diag.iter().copied().filter(|&d| d != 0).collect();
    AbelianGroupShape {
        rank: 4 - nonzero.len(),
        torsion: nonzero.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect(),
    }
}

fn transpose(m: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    (0..cols)
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::MappingClass;
    use crate::words::SurfaceWord;

    const A1: HomologyClass = HomologyClass([1, 0, 0, 0]);
    const B1: HomologyClass = HomologyClass([0, 1, 0, 0]);
    const A2: HomologyClass = HomologyClass([0, 0, 1, 0]);
    const B2: HomologyClass = HomologyClass([0, 0, 0, 1]);

    #[test]
    fn pairing_convention() {
        assert_eq!(pairing(A1, B1), 1);
        assert_eq!(pairing(B1, A1), -1);
        assert_eq!(pairing(A1, A2), 0);
        assert_eq!(pairing(A2, B2), 1);
    }

    #[test]
    fn transvection_examples() {
        assert_eq!(transvection(HomologyClass::ZERO), SymplecticMatrix::identity());
        // along a1: b1 -> b1 - a1
        let t = transvection(A1);
        assert_eq!(t.apply(B1), B1 - A1);
        assert!(t.is_symplectic());
        // chain example from the small-cycle computation:
        // [5] + <[5],[B]>[B] with [B] = a1+a2, [5] = b2 gives a1+a2+b2 up to
        // the sign of the pairing
        let b = A1 + A2;
        let img = transvection(b).apply(B2);
        assert!(img.same_up_to_sign(B2 + b) || img.same_up_to_sign(B2 - b));
        assert_eq!(img, B2 - b);
    }

    #[test]
    fn word_action_matches_abelianized_automorphism() {
        let words = ["e", "1", "2 1", "3 4' 5 s", "1 2 3 4 5", "s' 3 3 2"];
        for s in words {
            let w: McgWord = s.parse().unwrap();
            let m = homology_of_mcg_word(&w);
            assert!(m.is_symplectic(), "{s}");
            let phi = MappingClass::evaluate(&w).unwrap();
            for g in 1..=4i8 {
                let img = phi.apply(&SurfaceWord::generator(g)).unwrap();
                let via_matrix = m.apply(HomologyClass::basis((g - 1) as usize));
                assert_eq!(
                    HomologyClass(img.abelianization()),
                    via_matrix,
                    "word {s}, generator {g}"
                );
            }
        }
    }

    #[test]
    fn base_classes() {
        assert_eq!(base_curve_class(BaseCurveId::C1), B1);
        assert_eq!(base_curve_class(BaseCurveId::C2), A1);
        assert_eq!(base_curve_class(BaseCurveId::C3), B1 + B2);
        assert_eq!(base_curve_class(BaseCurveId::C4), A2);
        assert_eq!(base_curve_class(BaseCurveId::C5), B2);
        assert_eq!(base_curve_class(BaseCurveId::Sigma0), HomologyClass::ZERO);
    }

    #[test]
    fn separating_tests() {
        assert!(!is_separating(&Curve::base(BaseCurveId::C1)));
        assert!(is_separating(&Curve::base(BaseCurveId::Sigma0)));
        let moved = Curve::new("1 2 3 4 5".parse().unwrap(), BaseCurveId::Sigma0);
        assert!(is_separating(&moved));
    }

    #[test]
    fn class_of_curve_matches_word_abelianization() {
        let c = Curve::new("4 2' 3 s".parse().unwrap(), BaseCurveId::C3);
        let via_matrix = class_of_curve(&c);
        let via_word = HomologyClass(c.word().unwrap().abelianization());
        assert!(via_matrix.same_up_to_sign(via_word));
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1_of_total_space(&[]), AbelianGroupShape::free(4));
        assert!(h1_of_total_space(&[A1, B1, A2, B2]).is_trivial());
        // the small-cycle fibration classes
        let classes = [A1 + A2, A1 - B1 + A2 - B2, B1 + B2, HomologyClass::ZERO];
        assert_eq!(h1_of_total_space(&classes), AbelianGroupShape::free(2));
        // torsion case
        let classes = [A1.scale(2), B1.scale(3), A2, B2];
        assert_eq!(
            h1_of_total_space(&classes),
            AbelianGroupShape { rank: 0, torsion: vec![6] }
        );
    }

    #[test]
    fn snf_divisibility_chain() {
        let diag = smith_diagonal(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(diag, vec![1, 6]);
    }

    #[test]
    fn ten_chain_squared_acts_trivially_on_homology() {
        let w: McgWord = "1 2 3 4 5 5 4 3 2 1 1 2 3 4 5 5 4 3 2 1".parse().unwrap();
        assert_eq!(homology_of_mcg_word(&w), SymplecticMatrix::identity());
    }
}
