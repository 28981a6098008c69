//! Geography of genus-2 Lefschetz fibrations: closed-form invariants from
//! the type (n, s), the bounding lines, slope, the recipe planner for the
//! constructive region, and pi_1 presentations with Tietze simplification.

use std::fmt;

use num_rational::Ratio;

use crate::factorization::{Factorization, FibrationType};
use crate::mcg::McgWord;
use crate::words::{free_reduce, Letter, SurfaceWord, RELATOR};
use crate::{Error, Result};

/// Topological invariants of the fibration total space, from Prop-1-style
/// closed forms: e = n+s-4, sigma = -(3n+s)/5, chi_h = (n+2s)/10 - 1,
/// c1^2 = (n+7s)/5 - 8.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InvariantSet {
    pub e: i64,
    pub sigma: i64,
    pub chi_h: i64,
    pub c1sq: i64,
    /// m = (n+2s)/10, the hyperelliptic signature multiplicity.
    pub m: i64,
    /// first Betti number when H1 has been computed
    pub betti1: Option<usize>,
}

pub fn invariants_from_type(t: FibrationType) -> Result<InvariantSet> {
    let (n, s) = (i64::from(t.n), i64::from(t.s));
    if (n + 2 * s) % 10 != 0 {
        return Err(Error::InadmissibleType { n: t.n, s: t.s });
    }
    let inv = InvariantSet {
        e: n + s - 4,
        sigma: -(3 * n + s) / 5,
        chi_h: (n + 2 * s) / 10 - 1,
        c1sq: (n + 7 * s) / 5 - 8,
        m: (n + 2 * s) / 10,
        betti1: None,
    };
    debug_assert_eq!(inv.c1sq, 2 * inv.e + 3 * inv.sigma);
    debug_assert_eq!(4 * inv.chi_h, inv.e + inv.sigma);
    Ok(inv)
}

/// Slope a = (c1^2 + 3)/chi_h = 2 + (10s-30)/(n+2s-10), exact.
pub fn slope(t: FibrationType) -> Result<Ratio<i64>> {
    let inv = invariants_from_type(t)?;
    if inv.chi_h == 0 {
        return Err(Error::SlopeUndefined { n: t.n, s: t.s });
    }
    Ok(Ratio::new(inv.c1sq + 3, inv.chi_h))
}

/// A lattice point (chi_h, c1^2).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GeographyPoint {
    pub x: i64,
    pub y: i64,
}

/// A line y = a x + b in geography coordinates, with a given as a ratio so
/// the 5.5-line is representable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GeographyLine {
    pub a: Ratio<i64>,
    pub b: i64,
}

impl GeographyLine {
    pub fn y_at(&self, x: i64) -> Ratio<i64> {
        self.a * x + self.b
    }
}

/// The s-Noether line c1^2 = 2 chi_h - 6 + s (s = 0 is the Noether line).
pub fn s_line(s: u32) -> GeographyLine {
    GeographyLine { a: Ratio::from_integer(2), b: i64::from(s) - 6 }
}

/// The BK(t) line c1^2 = 5 chi_h - 3 + t (t = 0 is the BK line).
pub fn bk_t_line(t: u32) -> GeographyLine {
    GeographyLine { a: Ratio::from_integer(5), b: i64::from(t) - 3 }
}

/// The constructive ceiling c1^2 = 5.5 chi_h - 3.
pub fn ceiling_line() -> GeographyLine {
    GeographyLine { a: Ratio::new(11, 2), b: -3 }
}

/// Classification of a lattice point against the Thm-5 bounds and the
/// constructive lines.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegionClass {
    /// below the Noether line y = 2x - 6
    ViolatesNoether,
    /// above y = 6x - 3 (or y = 6x - 4 when simply connected is demanded)
    ViolatesUpper,
    /// 2x - 6 <= y < 5x - 3
    AdmissibleBelowBk,
    /// exactly on y = 5x - 3
    OnBk,
    /// 5x - 3 < y <= 5.5x - 3
    BetweenBkAndCeiling,
    /// 5.5x - 3 < y <= upper bound: admissible but outside the
    /// constructive theorems
    BetweenCeilingAndUpper,
}

impl fmt::Display for RegionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RegionClass::ViolatesNoether => "violates-noether",
            RegionClass::ViolatesUpper => "violates-upper",
            RegionClass::AdmissibleBelowBk => "admissible-below-bk",
            RegionClass::OnBk => "on-bk",
            RegionClass::BetweenBkAndCeiling => "between-bk-and-5.5",
            RegionClass::BetweenCeilingAndUpper => "between-5.5-and-6",
        };
        write!(f, "{s}")
    }
}

pub fn region_check(p: GeographyPoint, simply_connected: bool) -> RegionClass {
    let (x, y) = (p.x, p.y);
    if y < 2 * x - 6 {
        return RegionClass::ViolatesNoether;
    }
    let upper = if simply_connected { 6 * x - 4 } else { 6 * x - 3 };
    if y > upper {
        return RegionClass::ViolatesUpper;
    }
    if y < 5 * x - 3 {
        RegionClass::AdmissibleBelowBk
    } else if y == 5 * x - 3 {
        RegionClass::OnBk
    } else if 2 * y <= 11 * x - 6 {
        RegionClass::BetweenBkAndCeiling
    } else {
        RegionClass::BetweenCeilingAndUpper
    }
}

/// A symbolic construction plan. Leaves name catalog entries; nodes mirror
/// the construction operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Catalog(String),
    FiberSum(Box<Recipe>, Box<Recipe>, McgWord),
    BuildX(u32),
    BuildM(u32),
    Lantern(Box<Recipe>),
    Chain(Box<Recipe>),
}

/// Claimed types of the catalog entries the planner may reference.
pub fn catalog_entry_type(id: &str) -> Option<FibrationType> {
    let (n, s) = match id {
        "W" => (4, 3),
        "matsumoto" => (6, 2),
        "X" => (10, 10),
        "chain20" => (20, 0),
        "chain30" => (30, 0),
        "bk-18-1" => (18, 1),
        "bk-12-4" => (12, 4),
        "bk-22-4" => (22, 4),
        "bk-10-5" => (10, 5),
        "bk-20-5" => (20, 5),
        "bk-8-6" => (8, 6),
        "bk-18-6" => (18, 6),
        _ => return None,
    };
    Some(FibrationType { n, s })
}

impl Recipe {
    pub fn predicted_type(&self) -> Result<FibrationType> {
        match self {
            Recipe::Catalog(id) => {
                catalog_entry_type(id).ok_or_else(|| Error::UnknownEntry(id.clone()))
            }
            Recipe::FiberSum(a, b, _) => {
                let (ta, tb) = (a.predicted_type()?, b.predicted_type()?);
                Ok(FibrationType { n: ta.n + tb.n, s: ta.s + tb.s })
            }
            Recipe::BuildX(t) => Ok(FibrationType { n: 4 + 6 * t, s: 3 + 7 * t }),
            Recipe::BuildM(t) => Ok(FibrationType { n: 4 + 24 * t, s: 3 + 38 * t }),
            Recipe::Lantern(a) => {
                let t = a.predicted_type()?;
                if t.n < 2 {
                    return Err(Error::InvalidRewrite(
                        "lantern needs two non-separating cycles".into(),
                    ));
                }
                Ok(FibrationType { n: t.n - 2, s: t.s + 1 })
            }
            Recipe::Chain(a) => {
                let t = a.predicted_type()?;
                if t.n < 12 {
                    return Err(Error::InvalidRewrite(
                        "2-chain substitution needs twelve non-separating cycles".into(),
                    ));
                }
                Ok(FibrationType { n: t.n - 12, s: t.s + 1 })
            }
        }
    }

    pub fn predicted_point(&self) -> Result<GeographyPoint> {
        let inv = invariants_from_type(self.predicted_type()?)?;
        Ok(GeographyPoint { x: inv.chi_h, y: inv.c1sq })
    }

    /// True when every leaf has word data in the shipped catalog.
    pub fn materializable(&self) -> bool {
        match self {
            Recipe::Catalog(id) => {
                matches!(id.as_str(), "W" | "matsumoto" | "X" | "chain20" | "chain30")
            }
            Recipe::FiberSum(a, b, _) => a.materializable() && b.materializable(),
            Recipe::BuildX(_) | Recipe::BuildM(_) => true,
            Recipe::Lantern(a) | Recipe::Chain(a) => a.materializable(),
        }
    }

    /// First stub leaf, if any.
    pub fn stub_leaf(&self) -> Option<&str> {
        match self {
            Recipe::Catalog(id) => (!self.materializable()).then_some(id.as_str()),
            Recipe::FiberSum(a, b, _) => a.stub_leaf().or_else(|| b.stub_leaf()),
            Recipe::BuildX(_) | Recipe::BuildM(_) => None,
            Recipe::Lantern(a) | Recipe::Chain(a) => a.stub_leaf(),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Catalog(id) => write!(f, "(catalog {id})"),
            Recipe::FiberSum(a, b, tw) => write!(f, "(fibersum {a} {b} twist \"{tw}\")"),
            Recipe::BuildX(t) => write!(f, "(buildx {t})"),
            Recipe::BuildM(t) => write!(f, "(buildm {t})"),
            Recipe::Lantern(a) => write!(f, "(lantern {a})"),
            Recipe::Chain(a) => write!(f, "(chain {a})"),
        }
    }
}

fn fold_sums(base: Recipe, extra: impl IntoIterator<Item = Recipe>) -> Recipe {
    let mut acc = base;
    for r in extra {
        acc = Recipe::FiberSum(Box::new(acc), Box::new(r), McgWord::identity());
    }
    acc
}

/// Seed entry id for the smallest type (n(s), s) below the BK line with
/// c1^2 >= 0, for base cases s in 0..=6, plus the (n(s)+10, s) second seed.
fn seed_ids(s0: u32) -> Option<(&'static str, Vec<&'static str>, &'static str, Vec<&'static str>)> {
    // (first-seed root, first-seed padding, second-seed root, second-seed padding)
    Some(match s0 {
        0 => ("chain20", vec!["chain20"], "chain20", vec!["chain30"]),
        1 => ("bk-18-1", vec!["chain20"], "bk-18-1", vec!["chain30"]),
        2 => ("matsumoto", vec!["chain20"], "matsumoto", vec!["chain30"]),
        3 => ("W", vec!["chain20"], "W", vec!["chain30"]),
        4 => ("bk-12-4", vec![], "bk-22-4", vec![]),
        5 => ("bk-10-5", vec![], "bk-20-5", vec![]),
        6 => ("bk-8-6", vec![], "bk-18-6", vec![]),
        _ => return None,
    })
}

/// Plan a construction for the point (x, y) = (chi_h, c1^2), following the
/// constructive theorems: above the BK line through X(t) fiber-summed with
/// k copies of the (4,3) word; on or below it through s-Noether seeds
/// padded by (20,0) chain words and (4,3) sums.
pub fn plan(p: GeographyPoint) -> Result<Recipe> {
    let (x, y) = (p.x, p.y);
    let reject = |reason: &str| Error::OutsideRegion { x, y, reason: reason.into() };
    if y < 0 {
        return Err(reject("c1^2 >= 0 (scope of Theorems 7 and 8)"));
    }
    if y < 2 * x - 6 {
        return Err(reject("Noether inequality c1^2 >= 2 chi_h - 6"));
    }
    if 2 * y > 11 * x - 6 {
        if y <= 6 * x - 3 {
            return Err(reject("constructive ceiling c1^2 <= 5.5 chi_h - 3"));
        }
        return Err(reject("upper bound c1^2 <= 6 chi_h - 3"));
    }
    if y > 5 * x - 3 {
        // BK(t) branch: (chi_h, c1^2) = (2t + k, 11t + 5k - 3)
        let t = y - 5 * x + 3;
        let k = x - 2 * t;
        debug_assert!(t >= 1 && k >= 0);
        let recipe = fold_sums(
            Recipe::BuildX(t as u32),
            (0..k).map(|_| Recipe::Catalog("W".into())),
        );
        return Ok(recipe);
    }
    // below or on the BK line: s is forced by the s-Noether line
    let s = (y - 2 * x + 6) as u32;
    let n_target = 10 * (x + 1) - 2 * i64::from(s);
    // reduce s to a base case with the fewest (4,3) summands
    let mut j = if s > 6 { (s - 6).div_ceil(3) } else { 0 };
    loop {
        let s0 = s - 3 * j;
        let (Some(n0), Some((seed1, pad1, seed2, pad2))) =
            (n_target.checked_sub(4 * i64::from(j)), seed_ids(s0))
        else {
            return Err(reject("no base-case seed reachable"));
        };
        let try_seed = |root: &str, pads: &[&str]| -> Option<Recipe> {
            let mut t = catalog_entry_type(root)?;
            for p in pads {
                let pt = catalog_entry_type(p)?;
                t = FibrationType { n: t.n + pt.n, s: t.s + pt.s };
            }
            if t.s != s0 || i64::from(t.n) > n0 || (n0 - i64::from(t.n)) % 20 != 0 {
                return None;
            }
            let chains = (n0 - i64::from(t.n)) / 20;
            let base = fold_sums(
                Recipe::Catalog(root.into()),
                pads.iter().map(|p| Recipe::Catalog((*p).into())),
            );
            let with_chains =
                fold_sums(base, (0..chains).map(|_| Recipe::Catalog("chain20".into())));
            Some(fold_sums(
                with_chains,
                (0..j).map(|_| Recipe::Catalog("W".into())),
            ))
        };
        if let Some(r) = try_seed(seed1, &pad1).or_else(|| try_seed(seed2, &pad2)) {
            return Ok(r);
        }
        // seeds too large for this s0: trade three more separating cycles
        // into a (4,3) summand and retry
        j += 1;
        if 3 * j > s {
            return Err(reject("no base-case seed reachable"));
        }
    }
}

/// A finite presentation: `generators` many generators indexed 1.., and
/// relator words over signed generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Letter>,
    pub relators: Vec<Vec<Letter>>,
    /// set when tietze_simplify stopped on budget rather than fixpoint
    pub budget_exhausted: bool,
}

impl Presentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |l: Letter| {
            let names = ["a1", "b1", "a2", "b2"];
            let idx = (l.unsigned_abs() - 1) as usize;
            let base = names.get(idx).map(|s| s.to_string()).unwrap_or(format!("g{idx}"));
            if l < 0 {
                format!("{base}'")
            } else {
                base
            }
        };
        write!(
            f,
            "<{} | ",
            self.generators.iter().map(|&g| name(g)).collect::<Vec<_>>().join(", ")
        )?;
        let rs: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                if r.is_empty() {
                    "e".to_string()
                } else {
                    r.iter().map(|&l| name(l)).collect::<Vec<_>>().join(" ")
                }
            })
            .collect();
        write!(f, "{}>", rs.join(", "))
    }
}

/// Presentation of pi_1 of the total space: the surface group relator plus
/// one relator per vanishing cycle.
pub fn pi1_presentation(f: &Factorization) -> Result<Presentation> {
    let mut relators = vec![RELATOR.to_vec()];
    for tok in &f.tokens {
        relators.push(tok.curve.word()?.letters().to_vec());
    }
    Ok(Presentation {
        generators: vec![1, 2, 3, 4],
        relators,
        budget_exhausted: false,
    })
}

pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;

fn cyclically_reduce(mut w: Vec<Letter>) -> Vec<Letter> {
    w = free_reduce(&w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
        w = free_reduce(&w);
    }
    w
}

fn is_commutator_of(r: &[Letter]) -> Option<(Letter, Letter)> {
    if r.len() == 4 && r[0] == -r[2] && r[1] == -r[3] && r[0].abs() != r[1].abs() {
        Some((r[0].abs(), r[1].abs()))
    } else {
        None
    }
}

/// Substitute occurrences of generator `g` by the word `rep` (and of `-g`
/// by the inverse of `rep`).
fn substitute(w: &[Letter], g: Letter, rep: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len() * (rep.len().max(1)));
    for &l in w {
        if l == g {
            out.extend_from_slice(rep);
        } else if l == -g {
            out.extend(rep.iter().rev().map(|&x| -x));
        } else {
            out.push(l);
        }
    }
    free_reduce(&out)
}

/// Greedy Tietze simplification with a move budget: cyclic/free reduction,
/// duplicate removal, elimination of generators defined by a relator in
/// which they occur exactly once, and abelian sorting of relators with
/// respect to generator pairs whose commutator is itself a relator.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    let mut gens = p.generators.clone();
    let mut rels: Vec<Vec<Letter>> =
        p.relators.iter().map(|r| cyclically_reduce(r.clone())).collect();
    let mut moves = 0usize;
    let mut exhausted = false;
    'outer: loop {
        if moves >= budget {
            exhausted = true;
            break;
        }
        rels.retain(|r| !r.is_empty());
        rels.sort();
        rels.dedup();
        // drop relators that are inverses of other relators
        let mut drop = vec![false; rels.len()];
        for i in 0..rels.len() {
            for k in (i + 1)..rels.len() {
                let inv: Vec<Letter> = rels[k].iter().rev().map(|&x| -x).collect();
                if rels[i] == inv {
                    drop[k] = true;
                }
            }
        }
        let mut it = drop.iter();
        rels.retain(|_| !*it.next().unwrap());

        // abelian sorting against commutator relators
        let pairs: Vec<(Letter, Letter)> =
            rels.iter().filter_map(|r| is_commutator_of(r)).collect();
        if !pairs.is_empty() {
            let mut changed = false;
            for r in rels.iter_mut() {
                if is_commutator_of(r).is_some() {
                    continue;
                }
                let mut w = r.clone();
                let mut local = false;
                let mut pass = true;
                while pass {
                    pass = false;
                    for i in 0..w.len().saturating_sub(1) {
                        let (x, y) = (w[i], w[i + 1]);
                        let commutes = pairs.iter().any(|&(a, b)| {
                            (x.abs() == a && y.abs() == b) || (x.abs() == b && y.abs() == a)
                        }) || x.abs() == y.abs();
                        if commutes && y.abs() < x.abs() {
                            w.swap(i, i + 1);
                            pass = true;
                            local = true;
                        }
                    }
                    w = free_reduce(&w);
                }
                let w = cyclically_reduce(w);
                if local && w.len() < r.len() {
                    *r = w;
                    changed = true;
                    moves += 1;
                }
            }
            if changed {
                continue 'outer;
            }
        }

        // eliminate a generator that appears exactly once in some relator,
        // preferring the shortest defining relator
        let mut best: Option<(usize, usize)> = None; // (relator idx, position)
        for (ri, r) in rels.iter().enumerate() {
            for (pi, &l) in r.iter().enumerate() {
                let occurrences =
                    r.iter().filter(|&&x| x.abs() == l.abs()).count();
                if occurrences == 1 {
                    let better = match best {
                        None => true,
                        Some((bri, _)) => r.len() < rels[bri].len(),
                    };
                    if better {
                        best = Some((ri, pi));
                    }
                }
            }
        }
        if let Some((ri, pi)) = best {
            let r = rels[ri].clone();
            let l = r[pi];
            // r = u l v = 1  =>  l = u^-1 v^-1
            let mut rep: Vec<Letter> = r[pi + 1..].iter().rev().map(|&x| -x).collect();
            rep.extend(r[..pi].iter().rev().map(|&x| -x));
            let g = l.abs();
            let rep = if l > 0 {
                rep
            } else {
                rep.iter().rev().map(|&x| -x).collect()
            };
            rels.remove(ri);
            for rr in rels.iter_mut() {
                *rr = cyclically_reduce(substitute(rr, g, &rep));
            }
            gens.retain(|&x| x != g);
            moves += 1;
            continue 'outer;
        }
        break;
    }
    rels.retain(|r| !r.is_empty());
    rels.sort();
    rels.dedup();
    Presentation { generators: gens, relators: rels, budget_exhausted: exhausted }
}

/// Convenience: abelianized shape of a presentation (for consistency with
/// the homology module).
pub fn presentation_h1(p: &Presentation) -> crate::homology::AbelianGroupShape {
    use crate::homology::smith_diagonal;
    let idx: std::collections::HashMap<Letter, usize> =
        p.generators.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let k = p.generators.len();
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for r in &p.relators {
        let mut v = vec![0i64; k];
        for &l in r {
            if let Some(&i) = idx.get(&l.abs()) {
                v[i] += i64::from(l.signum());
            }
        }
        cols.push(v);
    }
    let m: Vec<Vec<i64>> = (0..k)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect();
    let diag = smith_diagonal(m);
    let nonzero: Vec<i64> = diag.into_iter().filter(|&d| d != 0).collect();
    crate::homology::AbelianGroupShape {
        rank: k - nonzero.len(),
        torsion: nonzero.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect(),
    }
}

/// Helper: surface word of a curve as a relator (for tests and the CLI).
pub fn relator_of(w: &SurfaceWord) -> Vec<Letter> {
    w.letters().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ftype(n: u32, s: u32) -> FibrationType {
        FibrationType { n, s }
    }

    #[test]
    fn invariants_examples() {
        let inv = invariants_from_type(ftype(10, 10)).unwrap();
        assert_eq!((inv.e, inv.sigma, inv.chi_h, inv.c1sq), (16, -8, 2, 8));
        let inv = invariants_from_type(ftype(4, 3)).unwrap();
        assert_eq!((inv.chi_h, inv.c1sq), (0, -3));
        let inv = invariants_from_type(ftype(40, 0)).unwrap();
        assert_eq!((inv.chi_h, inv.c1sq), (3, 0));
        assert!(invariants_from_type(ftype(7, 0)).is_err());
    }

    #[test]
    fn slope_examples() {
        assert_eq!(slope(ftype(24, 38)).unwrap(), Ratio::new(53, 9));
        for t in 1..=5u32 {
            assert_eq!(
                slope(ftype(4 + 6 * t, 3 + 7 * t)).unwrap(),
                Ratio::new(11, 2)
            );
        }
        assert!(matches!(
            slope(ftype(4, 3)),
            Err(Error::SlopeUndefined { .. })
        ));
    }

    #[test]
    fn region_examples() {
        assert_eq!(
            region_check(GeographyPoint { x: 2, y: 8 }, true),
            RegionClass::BetweenBkAndCeiling
        );
        assert_eq!(
            region_check(GeographyPoint { x: 3, y: -1 }, false),
            RegionClass::ViolatesNoether
        );
        assert_eq!(
            region_check(GeographyPoint { x: 1, y: 3 }, true),
            RegionClass::ViolatesUpper
        );
        assert_eq!(
            region_check(GeographyPoint { x: 1, y: 3 }, false),
            RegionClass::BetweenCeilingAndUpper
        );
        assert_eq!(
            region_check(GeographyPoint { x: 1, y: 2 }, false),
            RegionClass::OnBk
        );
    }

    #[test]
    fn lines() {
        assert_eq!(s_line(0), GeographyLine { a: Ratio::from_integer(2), b: -6 });
        assert_eq!(s_line(3).b, -3);
        assert_eq!(bk_t_line(0), GeographyLine { a: Ratio::from_integer(5), b: -3 });
    }

    #[test]
    fn plan_examples() {
        // (3,0): Noether-line point, type (40,0), two chain20 words
        let r = plan(GeographyPoint { x: 3, y: 0 }).unwrap();
        assert_eq!(r.predicted_type().unwrap(), ftype(40, 0));
        assert_eq!(
            r.predicted_point().unwrap(),
            GeographyPoint { x: 3, y: 0 }
        );
        assert!(r.materializable());
        // (2,8): the X point
        let r = plan(GeographyPoint { x: 2, y: 8 }).unwrap();
        assert_eq!(r, Recipe::BuildX(1));
        // (4,13): below-BK, s = 11
        let r = plan(GeographyPoint { x: 4, y: 13 }).unwrap();
        assert_eq!(r.predicted_point().unwrap(), GeographyPoint { x: 4, y: 13 });
        // rejections
        assert!(plan(GeographyPoint { x: 3, y: -1 }).is_err());
        assert!(plan(GeographyPoint { x: 2, y: 9 }).is_err());
    }

    #[test]
    fn plan_scan_region() {
        for x in 1..=20i64 {
            for y in 0..=(11 * x - 6) / 2 {
                if y < 2 * x - 6 {
                    continue;
                }
                let p = GeographyPoint { x, y };
                let r = plan(p).unwrap_or_else(|e| panic!("plan({x},{y}): {e}"));
                assert_eq!(r.predicted_point().unwrap(), p, "({x},{y})");
                if y == 5 * x - 2 {
                    // first BK(t) line above BK routes through X(t)
                    fn has_buildx(r: &Recipe) -> bool {
                        match r {
                            Recipe::BuildX(_) => true,
                            Recipe::FiberSum(a, b, _) => has_buildx(a) || has_buildx(b),
                            Recipe::Lantern(a) | Recipe::Chain(a) => has_buildx(a),
                            _ => false,
                        }
                    }
                    assert!(has_buildx(&r), "({x},{y}) should use X(t)");
                }
            }
        }
    }

    #[test]
    fn tietze_on_small_presentations() {
        // <a, b | a, ab> is trivial
        let p = Presentation {
            generators: vec![1, 2],
            relators: vec![vec![1], vec![1, 2]],
            budget_exhausted: false,
        };
        let q = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
        assert_eq!(q.generator_count(), 0);
        assert!(q.relators.is_empty());
        // Z^2 shape survives
        let p = Presentation {
            generators: vec![1, 2],
            relators: vec![vec![1, 2, -1, -2]],
            budget_exhausted: false,
        };
        let q = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
        assert_eq!(q.generator_count(), 2);
        assert_eq!(q.relators.len(), 1);
    }
}
