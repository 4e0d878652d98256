//! Seeded random formulas.

use rand::Rng;

use crate::syntax::Formula;

/// Draws formulas over letters `p0..p{letters-1}` with at most
/// `max_depth` connectives on any branch, not counting those inside `top`.
#[derive(Clone, Copy, Debug)]
pub struct FormulaSampler {
    pub letters: u32,
    pub max_depth: usize,
}

impl FormulaSampler {
    pub fn new(letters: u32, max_depth: usize) -> Self {
        assert!(letters > 0, "need at least one letter");
        FormulaSampler { letters, max_depth }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        self.sample_depth(rng, self.max_depth)
    }

    fn atom<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        match rng.gen_range(0..10) {
            0 => Formula::Bot,
            1 => Formula::top(),
            _ => Formula::letter(rng.gen_range(0..self.letters)),
        }
    }

    fn sample_depth<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Formula {
        if depth == 0 || rng.gen_range(0..4) == 0 {
            return self.atom(rng);
        }
        let l = self.sample_depth(rng, depth - 1);
        let r = self.sample_depth(rng, depth - 1);
        match rng.gen_range(0..3) {
            0 => Formula::and(l, r),
            1 => Formula::or(l, r),
            _ => Formula::imp(l, r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_bounds() {
        let s = FormulaSampler::new(2, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let f = s.sample(&mut rng);
            assert!(f.depth() <= 4 + 1);
            assert!(f.letters().iter().all(|&l| l < 2));
        }
    }
}
