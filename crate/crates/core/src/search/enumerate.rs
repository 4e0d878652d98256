use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use crate::frame_props::classify;
use crate::semantics::{FiniteFrame, Model, WorldSet};

use super::{ModelClass, SearchError, EXHAUSTIVE_BOUND};

fn check_bound(n: usize) -> Result<(), SearchError> {
    if n > EXHAUSTIVE_BOUND {
        return Err(SearchError::BoundExceeded {
            n,
            bound: EXHAUSTIVE_BOUND,
        });
    }
    Ok(())
}

fn permute_code(n: usize, code: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    for u in 0..n {
        for v in 0..n {
            if code >> (u * n + v) & 1 == 1 {
                out |= 1 << (perm[u] * n + perm[v]);
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for k in 0..n {
            if !prefix.contains(&k) {
                prefix.push(k);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// One frame per isomorphism class: the one with the least relation code.
fn canonical_frames(n: usize) -> Vec<FiniteFrame> {
    let perms = permutations(n);
    (0..1u64 << (n * n))
        .filter(|&code| perms.iter().all(|p| permute_code(n, code, p) >= code))
        .map(|code| FiniteFrame::from_code(n, code))
        .collect()
}

/// Every frame on `n` worlds in relation-code order; at `n = 4` only the
/// least-code representative of each isomorphism class.
pub fn enumerate_frames(n: usize) -> Result<Vec<FiniteFrame>, SearchError> {
    check_bound(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 4 {
        static FOUR: OnceLock<Vec<FiniteFrame>> = OnceLock::new();
        return Ok(FOUR.get_or_init(|| canonical_frames(4)).clone());
    }
    Ok((0..1u64 << (n * n))
        .map(|code| FiniteFrame::from_code(n, code))
        .collect())
}

/// Frames on `n` worlds whose classification the class admits.
pub fn enumerate_class_frames(
    n: usize,
    class: &ModelClass,
) -> Result<Vec<FiniteFrame>, SearchError> {
    Ok(enumerate_frames(n)?
        .into_iter()
        .filter(|f| class.admits(&classify(f)))
        .collect())
}

/// Every assignment of a value from `choices` to each letter, with the
/// last letter varying fastest.
fn assignments(
    letters: Vec<u32>,
    choices: Vec<WorldSet>,
) -> impl Iterator<Item = BTreeMap<u32, WorldSet>> {
    let k = letters.len();
    let m = choices.len();
    let total = if m == 0 && k > 0 { 0 } else { m.pow(k as u32) };
    (0..total).map(move |mut index| {
        let mut valuation = BTreeMap::new();
        for letter in letters.iter().rev() {
            valuation.insert(*letter, choices[index % m]);
            index /= m;
        }
        valuation
    })
}

/// Box-pre models on a frame: every letter ranges over the fixpoints.
pub fn frame_models(frame: &FiniteFrame, letters: &BTreeSet<u32>) -> impl Iterator<Item = Model> {
    let fixpoints = frame
        .enumerate_fixpoints()
        .expect("frame within fixpoint bound");
    let frame = frame.clone();
    assignments(letters.iter().copied().collect(), fixpoints)
        .map(move |v| Model::new(frame.clone(), v).expect("fixpoint valuation"))
}

/// Kripke models on a frame with arbitrary valuations.
pub fn frame_kripke_models(
    frame: &FiniteFrame,
    letters: &BTreeSet<u32>,
) -> impl Iterator<Item = Model> {
    let n = frame.size();
    let subsets: Vec<WorldSet> = (0..1u64 << n)
        .map(|bits| WorldSet::from_bits(n, bits))
        .collect();
    let frame = frame.clone();
    assignments(letters.iter().copied().collect(), subsets)
        .map(move |v| Model::kripke(frame.clone(), v).expect("sizes match"))
}

/// Every box-pre model on `n` worlds in the class, over the given letters.
pub fn enumerate_models(
    n: usize,
    letters: &BTreeSet<u32>,
    class: &ModelClass,
) -> Result<impl Iterator<Item = Model>, SearchError> {
    let frames = enumerate_class_frames(n, class)?;
    let letters = letters.clone();
    Ok(frames
        .into_iter()
        .flat_map(move |f| frame_models(&f, &letters).collect::<Vec<_>>()))
}

/// Every Kripke model on `n` worlds (any valuation) whose frame the class
/// admits.
pub fn enumerate_kripke_models(
    n: usize,
    letters: &BTreeSet<u32>,
    class: &ModelClass,
) -> Result<impl Iterator<Item = Model>, SearchError> {
    let frames = enumerate_class_frames(n, class)?;
    let letters = letters.clone();
    Ok(frames
        .into_iter()
        .flat_map(move |f| frame_kripke_models(&f, &letters).collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(ls: &[u32]) -> BTreeSet<u32> {
        ls.iter().copied().collect()
    }

    #[test]
    fn one_world_counts() {
        let all = enumerate_models(1, &letters(&[0]), &ModelClass::AllBoxPre)
            .unwrap()
            .count();
        assert_eq!(all, 3);
        let d2 = enumerate_models(1, &letters(&[0]), &ModelClass::D2)
            .unwrap()
            .count();
        assert_eq!(d2, 2);
        assert_eq!(
            enumerate_models(0, &letters(&[0]), &ModelClass::AllBoxPre)
                .unwrap()
                .count(),
            0
        );
    }

    #[test]
    fn bound_enforced() {
        assert!(matches!(
            enumerate_frames(5),
            Err(SearchError::BoundExceeded { n: 5, bound: 4 })
        ));
    }

    #[test]
    fn isomorphism_classes() {
        assert_eq!(canonical_frames(2).len(), 10);
        assert_eq!(canonical_frames(3).len(), 104);
        assert_eq!(enumerate_frames(4).unwrap().len(), 3044);
    }

    #[test]
    fn kripke_valuations_are_all_subsets() {
        let f = FiniteFrame::new(2, [(0, 1)]).unwrap();
        let ms: Vec<_> = frame_kripke_models(&f, &letters(&[0, 1])).collect();
        assert_eq!(ms.len(), 16);
        assert!(ms.iter().any(|m| !m.is_box_pre()));
    }

    #[test]
    fn no_letters_one_model_per_frame() {
        let n = enumerate_models(2, &BTreeSet::new(), &ModelClass::AllBoxPre)
            .unwrap()
            .count();
        assert_eq!(n, 16);
    }
}
