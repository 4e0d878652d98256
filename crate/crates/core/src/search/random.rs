use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::frame_props::classify;
use crate::semantics::{FiniteFrame, Model, WorldSet};

use super::{ModelClass, SearchError, REJECTION_BUDGET};

/// Largest world count for random models (the relation code must fit 64 bits).
pub const RANDOM_MAX_WORLDS: usize = 8;

fn sample_frame<R: Rng>(
    rng: &mut R,
    n: usize,
    class: &ModelClass,
) -> Result<FiniteFrame, SearchError> {
    if n == 0 {
        return Err(SearchError::NoWorlds);
    }
    if n > RANDOM_MAX_WORLDS {
        return Err(SearchError::BoundExceeded {
            n,
            bound: RANDOM_MAX_WORLDS,
        });
    }
    let mask = if n * n == 64 {
        u64::MAX
    } else {
        (1u64 << (n * n)) - 1
    };
    for _ in 0..REJECTION_BUDGET {
        let frame = FiniteFrame::from_code(n, rng.gen::<u64>() & mask);
        if class.admits(&classify(&frame)) {
            return Ok(frame);
        }
    }
    Err(SearchError::RejectionBudget {
        class: class.name().to_string(),
        budget: REJECTION_BUDGET,
    })
}

/// A box-pre model of the class, deterministic in `seed`: frames are
/// rejection-sampled, then each letter gets a uniformly chosen fixpoint.
pub fn random_model(
    class: &ModelClass,
    n: usize,
    letters: &BTreeSet<u32>,
    seed: u64,
) -> Result<Model, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = sample_frame(&mut rng, n, class)?;
    let fixpoints = frame.enumerate_fixpoints()?;
    let valuation: BTreeMap<u32, WorldSet> = letters
        .iter()
        .map(|&l| (l, fixpoints[rng.gen_range(0..fixpoints.len())]))
        .collect();
    Ok(Model::new(frame, valuation)?)
}

/// Like [`random_model`] but each letter gets an arbitrary set of worlds.
pub fn random_kripke_model(
    class: &ModelClass,
    n: usize,
    letters: &BTreeSet<u32>,
    seed: u64,
) -> Result<Model, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = sample_frame(&mut rng, n, class)?;
    let valuation: BTreeMap<u32, WorldSet> = letters
        .iter()
        .map(|&l| (l, WorldSet::from_bits(n, rng.gen::<u64>())))
        .collect();
    Ok(Model::kripke(frame, valuation)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(ls: &[u32]) -> BTreeSet<u32> {
        ls.iter().copied().collect()
    }

    #[test]
    fn d2_singleton() {
        for seed in 0..20 {
            let m = random_model(&ModelClass::D2, 1, &letters(&[0]), seed).unwrap();
            assert!(m.frame().has_edge(0, 0));
        }
    }

    #[test]
    fn deterministic() {
        let a = random_model(&ModelClass::D1, 3, &letters(&[0, 1]), 42).unwrap();
        let b = random_model(&ModelClass::D1, 3, &letters(&[0, 1]), 42).unwrap();
        assert_eq!(a.frame(), b.frame());
        assert_eq!(a.valuation(), b.valuation());
    }

    #[test]
    fn impossible_class_exhausts_budget() {
        let class = ModelClass::custom("reflexive and not pseudo-symmetric", |c| {
            c.reflexive && !c.pseudo_symmetric
        });
        let err = random_model(&class, 1, &letters(&[0]), 7).unwrap_err();
        assert!(matches!(err, SearchError::RejectionBudget { .. }));
        assert!(matches!(
            random_model(&ModelClass::D1, 0, &letters(&[0]), 7),
            Err(SearchError::NoWorlds)
        ));
    }
}
