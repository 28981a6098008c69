//! Breadth-first search over isotopy classes of curves under the twist
//! generators. Used to express a curve given by a surface-group word as
//! `phi(base)` for a twist word `phi`, which is the encoding the rest of
//! the system wants.

use std::collections::HashMap;

use crate::mcg::{BaseCurveId, Curve, MappingClass, McgWord, TwistLetter};
use crate::words::{curve_class_key, Letter, SurfaceWord};

const GENS: [(BaseCurveId, i8); 12] = [
    (BaseCurveId::C1, 1),
    (BaseCurveId::C1, -1),
    (BaseCurveId::C2, 1),
    (BaseCurveId::C2, -1),
    (BaseCurveId::C3, 1),
    (BaseCurveId::C3, -1),
    (BaseCurveId::C4, 1),
    (BaseCurveId::C4, -1),
    (BaseCurveId::C5, 1),
    (BaseCurveId::C5, -1),
    (BaseCurveId::Sigma0, 1),
    (BaseCurveId::Sigma0, -1),
];

/// Search limits: cap on curve-word length (prunes wild detours) and on
/// explored states.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub max_word_len: usize,
    pub max_states: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_word_len: 64, max_states: 2_000_000 }
    }
}

struct Node {
    parent: usize,
    step: Option<TwistLetter>,
    word: SurfaceWord,
}

fn reconstruct(nodes: &[Node], mut idx: usize) -> McgWord {
    let mut letters = Vec::new();
    while let Some(step) = nodes[idx].step {
        letters.push(step);
        idx = nodes[idx].parent;
    }
    // steps were applied left of the accumulated word, so the last step
    // found is the leftmost letter
    McgWord(letters)
}

/// Find a twist word `phi` with `phi(base)` isotopic to `target`, by BFS
/// from the base curve over twist generators. Completeness is limited by
/// the supplied limits; `None` means "not found within limits".
pub fn find_conjugator(
    base: BaseCurveId,
    target: &SurfaceWord,
    limits: SearchLimits,
) -> Option<McgWord> {
    let goal = curve_class_key(target);
    let start = base.curve_word();
    if curve_class_key(&start) == goal {
        return Some(McgWord::identity());
    }
    let twists: Vec<MappingClass> = GENS
        .iter()
        .map(|&(b, s)| MappingClass::base_twist(b, s))
        .collect();
    let mut nodes = vec![Node { parent: 0, step: None, word: start.clone() }];
    let mut seen: HashMap<Vec<Letter>, usize> = HashMap::new();
    seen.insert(curve_class_key(&start), 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() && nodes.len() < limits.max_states {
        let mut next = Vec::new();
        for &idx in &frontier {
            let w = nodes[idx].word.clone();
            for (gi, m) in twists.iter().enumerate() {
                let Ok(img) = m.apply(&w) else { continue };
                if img.len() > limits.max_word_len {
                    continue;
                }
                let key = curve_class_key(&img);
                if seen.contains_key(&key) {
                    continue;
                }
                let (b, s) = GENS[gi];
                let node = Node {
                    parent: idx,
                    step: Some(TwistLetter { base: b, sign: s }),
                    word: img,
                };
                nodes.push(node);
                let new_idx = nodes.len() - 1;
                seen.insert(key.clone(), new_idx);
                if key == goal {
                    return Some(reconstruct(&nodes, new_idx));
                }
                next.push(new_idx);
                if nodes.len() >= limits.max_states {
                    return None;
                }
            }
        }
        frontier = next;
    }
    None
}

/// Enumerate distinct isotopy classes in the orbit of a base curve under
/// twist words of bounded length, returning one witness conjugator per
/// class together with the resulting curve word.
pub fn enumerate_classes(
    base: BaseCurveId,
    max_depth: usize,
    limits: SearchLimits,
) -> Vec<(McgWord, SurfaceWord)> {
    let twists: Vec<MappingClass> = GENS
        .iter()
        .map(|&(b, s)| MappingClass::base_twist(b, s))
        .collect();
    let start = base.curve_word();
    let mut nodes = vec![Node { parent: 0, step: None, word: start.clone() }];
    let mut seen: HashMap<Vec<Letter>, usize> = HashMap::new();
    seen.insert(curve_class_key(&start), 0);
    let mut frontier = vec![0usize];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for &idx in &frontier {
            let w = nodes[idx].word.clone();
            for (gi, m) in twists.iter().enumerate() {
                if nodes.len() >= limits.max_states {
                    break;
                }
                let Ok(img) = m.apply(&w) else { continue };
                if img.len() > limits.max_word_len {
                    continue;
                }
                let key = curve_class_key(&img);
                if seen.contains_key(&key) {
                    continue;
                }
                let (b, s) = GENS[gi];
                nodes.push(Node {
                    parent: idx,
                    step: Some(TwistLetter { base: b, sign: s }),
                    word: img,
                });
                let new_idx = nodes.len() - 1;
                seen.insert(key, new_idx);
                next.push(new_idx);
            }
        }
        frontier = next;
    }
    (0..nodes.len())
        .map(|i| (reconstruct(&nodes, i), nodes[i].word.clone()))
        .collect()
}

/// Express a target curve word as a `Curve` over whichever base matches,
/// preferring non-separating bases for non-separating targets.
pub fn curve_from_word(target: &SurfaceWord, limits: SearchLimits) -> Option<Curve> {
    let separating = target.abelianization() == [0; 4];
    let bases: &[BaseCurveId] = if separating {
        &[BaseCurveId::Sigma0]
    } else {
        &[BaseCurveId::C2]
    };
    for &base in bases {
        if let Some(w) = find_conjugator(base, target, limits) {
            return Some(Curve::new(w, base));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_identity_for_base_curves() {
        for base in BaseCurveId::ALL {
            let w = find_conjugator(base, &base.curve_word(), SearchLimits::default())
                .unwrap();
            assert!(w.is_empty());
        }
    }

    #[test]
    fn finds_adjacent_chain_curve() {
        let w = find_conjugator(
            BaseCurveId::C1,
            &BaseCurveId::C2.curve_word(),
            SearchLimits::default(),
        )
        .unwrap();
        let c = Curve::new(w, BaseCurveId::C1);
        assert!(c.isotopic(&Curve::base(BaseCurveId::C2)).unwrap());
    }
}
