//! Exact arithmetic in the genus-2 surface group
//! `pi_1(Sigma_2) = <a1, b1, a2, b2 | [a1,b1][a2,b2]>`.
//!
//! Words are stored freely reduced and Dehn-reduced: any subword matching
//! strictly more than half (length >= 5) of a cyclic rotation of the relator
//! or its inverse is replaced by the shorter complementary half. Since every
//! piece of the genus-2 relator has length 1, Dehn's algorithm solves the
//! word problem: a word represents the identity iff it reduces to the empty
//! word.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A generator of the surface group, `1..=4` encoding `a1, b1, a2, b2`;
/// negative values are inverses. Zero is not a letter.
pub type Letter = i8;

pub const A1: Letter = 1;
pub const B1: Letter = 2;
pub const A2: Letter = 3;
pub const B2: Letter = 4;

/// The surface relator `[a1,b1][a2,b2]`.
pub const RELATOR: [Letter; 8] = [A1, B1, -A1, -B1, A2, B2, -A2, -B2];

/// Default cap on word length; composing twist automorphisms of a broken
/// build script can blow up exponentially, and failing loudly beats
/// thrashing.
pub const DEFAULT_MAX_LEN: usize = 1 << 20;

/// The 16 cyclic rotations of the relator and its inverse, indexed for
/// subword search during Dehn reduction.
#[derive(Debug)]
pub struct RelatorTable {
    rotations: [[Letter; 8]; 16],
}

impl RelatorTable {
    pub fn new() -> Self {
        let mut rotations = [[0; 8]; 16];
        let inverse: Vec<Letter> = RELATOR.iter().rev().map(|&x| -x).collect();
        for i in 0..8 {
            for j in 0..8 {
                rotations[i][j] = RELATOR[(i + j) % 8];
                rotations[8 + i][j] = inverse[(i + j) % 8];
            }
        }
        RelatorTable { rotations }
    }

    pub fn rotations(&self) -> &[[Letter; 8]; 16] {
        &self.rotations
    }

    /// Longest match of any rotation against `w` starting at `at`.
    /// Returns `(length, rotation index)` when the match has length >= 5.
    fn long_match(&self, w: &[Letter], at: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (ri, rot) in self.rotations.iter().enumerate() {
            let mut len = 0;
            while len < 8 && at + len < w.len() && w[at + len] == rot[len] {
                len += 1;
            }
            if len >= 5 && best.map_or(true, |(l, _)| len > l) {
                best = Some((len, ri));
            }
        }
        best
    }
}

impl Default for RelatorTable {
    fn default() -> Self {
        Self::new()
    }
}

thread_local! {
    static TABLE: RelatorTable = RelatorTable::new();
}

/// A freely reduced, Dehn-reduced word in the surface group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SurfaceWord {
    letters: Vec<Letter>,
}

/// Free reduction of a raw letter sequence (cancel adjacent inverse pairs).
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &x in letters {
        debug_assert!(x != 0 && x.abs() <= 4);
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn dehn_pass(w: &mut Vec<Letter>) -> bool {
    TABLE.with(|t| {
        let mut i = 0;
        while i < w.len() {
            if let Some((len, ri)) = t.long_match(w, i) {
                // rotation = matched prefix * tail, and rotation = 1 in the
                // group, so matched prefix = inverse of tail.
                let rot = &t.rotations()[ri];
                let repl: Vec<Letter> = rot[len..].iter().rev().map(|&x| -x).collect();
                let mut next = Vec::with_capacity(w.len());
                next.extend_from_slice(&w[..i]);
                for &x in &repl {
                    if next.last() == Some(&-x) {
                        next.pop();
                    } else {
                        next.push(x);
                    }
                }
                for &x in &w[i + len..] {
                    if next.last() == Some(&-x) {
                        next.pop();
                    } else {
                        next.push(x);
                    }
                }
                *w = next;
                return true;
            }
            i += 1;
        }
        false
    })
}

/// Dehn reduction to the fixed point: repeatedly replace the leftmost
/// subword of length >= 5 matching a relator rotation by its complement.
pub fn dehn_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut w = free_reduce(letters);
    while dehn_pass(&mut w) {}
    w
}

impl SurfaceWord {
    pub fn identity() -> Self {
        SurfaceWord { letters: Vec::new() }
    }

    /// Reduce an arbitrary letter sequence.
    pub fn reduce(letters: &[Letter]) -> Self {
        SurfaceWord { letters: dehn_reduce(letters) }
    }

    pub fn reduce_checked(letters: &[Letter], max_len: usize) -> Result<Self, Error> {
        if letters.len() > max_len {
            return Err(Error::WordLengthCap { len: letters.len(), cap: max_len });
        }
        Ok(Self::reduce(letters))
    }

    pub fn generator(g: Letter) -> Self {
        assert!(g != 0 && g.abs() <= 4);
        SurfaceWord { letters: vec![g] }
    }

    pub fn relator() -> Self {
        // reduces to the empty word, so construct the raw reduced form of
        // the *prefix* users may want; the relator itself is the identity.
        SurfaceWord::reduce(&RELATOR)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        SurfaceWord { letters: self.letters.iter().rev().map(|&x| -x).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.letters.clone();
        v.extend_from_slice(&other.letters);
        Self::reduce(&v)
    }

    /// `self * other * self^-1`
    pub fn conjugate(&self, other: &Self) -> Self {
        let mut v = self.letters.clone();
        v.extend_from_slice(&other.letters);
        v.extend(self.letters.iter().rev().map(|&x| -x));
        Self::reduce(&v)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut out = SurfaceWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Exponent sums in the basis (a1, b1, a2, b2).
    pub fn abelianization(&self) -> [i64; 4] {
        let mut v = [0i64; 4];
        for &x in &self.letters {
            v[(x.unsigned_abs() - 1) as usize] += x.signum() as i64;
        }
        v
    }

    /// Cyclic reduction: returns `(conj, core)` with `self = conj core conj^-1`
    /// and `core` cyclically Dehn-reduced.
    pub fn cyclic_reduce(&self) -> (SurfaceWord, SurfaceWord) {
        let mut conj: Vec<Letter> = Vec::new();
        let mut w = self.letters.clone();
        loop {
            let mut changed = false;
            while w.len() >= 2 && w[0] == -w[w.len() - 1] {
                conj.push(w[0]);
                w.pop();
                w.remove(0);
                changed = true;
            }
            // look for a long relator match in the cyclic word that wraps
            // or sits anywhere; rotate so it becomes linear and reduce.
            if w.len() >= 5 {
                let n = w.len();
                let mut ww = w.clone();
                ww.extend_from_slice(&w);
                let found = TABLE.with(|t| {
                    for i in 0..n {
                        let mut best: Option<(usize, usize)> = None;
                        for (ri, rot) in t.rotations().iter().enumerate() {
                            let mut len = 0;
                            while len < 8 && len < n && ww[i + len] == rot[len] {
                                len += 1;
                            }
                            if len >= 5 && best.map_or(true, |(l, _)| len > l) {
                                best = Some((len, ri));
                            }
                        }
                        if let Some((len, ri)) = best {
                            return Some((i, len, ri));
                        }
                    }
                    None
                });
                if let Some((i, len, ri)) = found {
                    conj.extend_from_slice(&w[..i]);
                    let mut rotated: Vec<Letter> = Vec::with_capacity(n);
                    rotated.extend_from_slice(&w[i..]);
                    rotated.extend_from_slice(&w[..i]);
                    let repl: Vec<Letter> = TABLE.with(|t| {
                        t.rotations()[ri][len..].iter().rev().map(|&x| -x).collect()
                    });
                    let mut next = repl;
                    next.extend_from_slice(&rotated[len..]);
                    w = dehn_reduce(&next);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        (SurfaceWord::reduce(&conj), SurfaceWord { letters: w })
    }
}

/// True iff `u` and `v` represent the same group element.
pub fn words_equal(u: &SurfaceWord, v: &SurfaceWord) -> bool {
    u.concat(&v.inverse()).is_empty()
}

/// Finds `w` with `w u w^-1 = v`, if `u` and `v` are conjugate.
///
/// Cyclically reduce both sides, then compare every cyclic rotation of one
/// core against the other using the word-problem solver; sound and complete
/// for the surface group since conjugate cyclically reduced words differ by
/// a rotation (up to relator half-swaps the solver already handles).
pub fn conjugacy_witness(u: &SurfaceWord, v: &SurfaceWord) -> Option<SurfaceWord> {
    let (cu, u0) = u.cyclic_reduce();
    let (cv, v0) = v.cyclic_reduce();
    if u0.len() != v0.len() {
        return None;
    }
    if u0.is_empty() {
        return Some(SurfaceWord::identity());
    }
    let n = u0.len();
    for i in 0..n {
        let mut rot: Vec<Letter> = Vec::with_capacity(n);
        rot.extend_from_slice(&u0.letters()[i..]);
        rot.extend_from_slice(&u0.letters()[..i]);
        let rot = SurfaceWord::reduce(&rot);
        if words_equal(&rot, &v0) {
            // u = cu u0 cu^-1, rot = p^-1 u0 p with p = u0[..i],
            // v = cv rot cv^-1  =>  w = cv p^-1 cu^-1 conjugates u to v.
            let p = SurfaceWord::reduce(&u0.letters()[..i]);
            let w = cv.concat(&p.inverse()).concat(&cu.inverse());
            return Some(w);
        }
    }
    None
}

/// Canonical key for the unoriented free-homotopy class of a curve word:
/// the lexicographically least word among all rotations of the half-swap
/// orbit of the cyclically reduced core and its inverse.
pub fn curve_class_key(w: &SurfaceWord) -> Vec<Letter> {
    let (_, core) = w.cyclic_reduce();
    let mut best: Option<Vec<Letter>> = None;
    for base in [core.letters().to_vec(), core.inverse().letters().to_vec()] {
        let orbit = half_swap_orbit(&base);
        for u in orbit {
            let rot = least_rotation(&u);
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Lexicographically least rotation of a cyclic word (Booth's algorithm).
fn least_rotation(u: &[Letter]) -> Vec<Letter> {
    let n = u.len();
    if n == 0 {
        return Vec::new();
    }
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    let at = |j: usize| u[j % n];
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if sj != at(k + (i + 1) as usize) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&u[k % n..]);
    out.extend_from_slice(&u[..k % n]);
    out
}

/// All cyclic words reachable by replacing a length-4 half of a relator
/// rotation with the complementary half (these are equal group elements of
/// the same length, so reduced forms are not unique without this closure).
fn half_swap_orbit(w: &[Letter]) -> Vec<Vec<Letter>> {
    let mut seen: std::collections::BTreeSet<Vec<Letter>> = std::collections::BTreeSet::new();
    let mut stack = vec![w.to_vec()];
    while let Some(u) = stack.pop() {
        if seen.contains(&u) {
            continue;
        }
        seen.insert(u.clone());
        let m = u.len();
        if m < 4 {
            continue;
        }
        let mut uu = u.clone();
        uu.extend_from_slice(&u);
        TABLE.with(|t| {
            for i in 0..m {
                for rot in t.rotations() {
                    if uu[i..i + 4] == rot[..4] {
                        let repl: Vec<Letter> = rot[4..].iter().rev().map(|&x| -x).collect();
                        let mut v: Vec<Letter> = Vec::with_capacity(m);
                        v.extend_from_slice(&uu[i + 4..i + m]);
                        v.extend_from_slice(&repl);
                        let v = free_reduce(&v);
                        if v.len() == m && !seen.contains(&v) {
                            stack.push(v);
                        }
                    }
                }
            }
        });
    }
    seen.into_iter().collect()
}

// ---- text rendering: letters `a1 b1 a2 b2`, inverse suffix `'`, `e` empty ----

const NAMES: [&str; 4] = ["a1", "b1", "a2", "b2"];

impl fmt::Display for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, &x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", NAMES[(x.unsigned_abs() - 1) as usize])?;
            if x < 0 {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurfaceWord({})", self)
    }
}

impl FromStr for SurfaceWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let (name, invert) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let idx = NAMES
                .iter()
                .position(|&n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator `{tok}`")))?;
            let mut x = (idx + 1) as Letter;
            if invert {
                x = -x;
            }
            letters.push(x);
        }
        Ok(SurfaceWord::reduce(&letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SurfaceWord {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduction_cancels_inverse_pairs() {
        assert_eq!(free_reduce(&[A1, -A1]), Vec::<Letter>::new());
        assert_eq!(free_reduce(&[A1, B1, -B1, A2]), vec![A1, A2]);
        let reduced = vec![A1, B1, A2];
        assert_eq!(free_reduce(&reduced), reduced);
    }

    #[test]
    fn relator_reduces_to_identity() {
        assert!(SurfaceWord::reduce(&RELATOR).is_empty());
    }

    #[test]
    fn long_prefix_replaced_by_complement() {
        // a1 b1 a1' b1' a2 (five-letter prefix of R) = b2 a2 b2' (complement)
        let prefix = SurfaceWord::reduce(&[A1, B1, -A1, -B1, A2]);
        assert_eq!(prefix.letters(), &[B2, A2, -B2]);
    }

    #[test]
    fn short_words_untouched() {
        assert_eq!(w("a1 b1").letters(), &[A1, B1]);
    }

    #[test]
    fn words_equal_examples() {
        assert!(words_equal(&SurfaceWord::identity(), &SurfaceWord::reduce(&RELATOR)));
        assert!(!words_equal(&w("a1"), &w("a2")));
        assert!(words_equal(&w("b2 a2 b2'"), &SurfaceWord::reduce(&[A1, B1, -A1, -B1, A2])));
    }

    #[test]
    fn conjugacy_examples() {
        let u = w("a1");
        let v = w("b1 a1 b1'");
        let wit = conjugacy_witness(&u, &v).unwrap();
        assert!(words_equal(&wit.conjugate(&u), &v));
        assert!(conjugacy_witness(&w("a1"), &w("a2")).is_none());
        let s = w("a1 b1 a2'");
        let wit = conjugacy_witness(&s, &s).unwrap();
        assert!(words_equal(&wit.conjugate(&s), &s));
    }

    #[test]
    fn rendering_round_trips() {
        for s in ["e", "a1", "a1 b1' a2", "b2' b2'"] {
            let parsed = w(s);
            let reparsed: SurfaceWord = parsed.to_string().parse().unwrap();
            assert_eq!(parsed, reparsed);
        }
        assert_eq!(w("e").to_string(), "e");
        assert_eq!(w("a1 b1' a2").to_string(), "a1 b1' a2");
    }

    #[test]
    fn commutator_identity_via_relator() {
        // [a1,b1] = [b2,a2] in the group
        let lhs = SurfaceWord::reduce(&[A1, B1, -A1, -B1]);
        let rhs = SurfaceWord::reduce(&[B2, A2, -B2, -A2]);
        assert!(words_equal(&lhs, &rhs));
    }
}
