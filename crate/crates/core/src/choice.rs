//! Sources of discrete random choices.
//!
//! Every randomized construction in this crate draws its randomness through
//! [`Chooser::choose`]. Plugging in an RNG gives sampling; plugging in a
//! [`Replay`] from [`exhaust`] walks every outcome of the process together
//! with its exact probability.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

pub trait Chooser {
    /// Returns a value in `0..n`. `n` is at least 1.
    fn choose(&mut self, n: usize) -> usize;
}

/// Uniform choices from a random number generator.
pub struct RngChooser<'a, R: Rng + ?Sized>(pub &'a mut R);

impl<R: Rng + ?Sized> Chooser for RngChooser<'_, R> {
    fn choose(&mut self, n: usize) -> usize {
        debug_assert!(n >= 1);
        if n == 1 {
            0
        } else {
            self.0.gen_range(0..n)
        }
    }
}

/// Replays a prefix of recorded choices and extends it with zeros.
pub struct Replay<'a> {
    path: &'a mut Vec<(usize, usize)>,
    pos: usize,
}

impl Chooser for Replay<'_> {
    fn choose(&mut self, n: usize) -> usize {
        debug_assert!(n >= 1);
        let c = if self.pos < self.path.len() {
            let (c, arity) = self.path[self.pos];
            assert_eq!(arity, n, "process is not deterministic given its choices");
            c
        } else {
            self.path.push((0, n));
            0
        };
        self.pos += 1;
        c
    }
}

/// Runs `process` once for every sequence of choices it can make and hands
/// each outcome to `visit` together with `D`, where `1/D` is the
/// probability of that sequence when every `choose(n)` is uniform.
///
/// Returns the number of runs.
pub fn exhaust<T>(
    mut process: impl FnMut(&mut Replay<'_>) -> T,
    mut visit: impl FnMut(T, &BigUint),
) -> u64 {
    let mut path: Vec<(usize, usize)> = Vec::new();
    let mut runs = 0u64;
    loop {
        let mut replay = Replay {
            path: &mut path,
            pos: 0,
        };
        let out = process(&mut replay);
        let used = replay.pos;
        path.truncate(used);
        runs += 1;

        let denom = path
            .iter()
            .fold(BigUint::one(), |acc, &(_, arity)| acc * arity);
        visit(out, &denom);

        let mut advanced = false;
        while let Some((c, arity)) = path.pop() {
            if c + 1 < arity {
                path.push((c + 1, arity));
                advanced = true;
                break;
            }
        }
        if !advanced {
            return runs;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    #[test]
    fn exhaust_covers_every_branch_once() {
        let mut seen = Vec::new();
        let mut total = BigRational::zero();
        let runs = exhaust(
            |c| {
                let a = c.choose(2);
                // arity of the second choice depends on the first
                let b = c.choose(a + 2);
                (a, b)
            },
            |out, d| {
                seen.push(out);
                total += BigRational::new(1.into(), d.clone().into());
            },
        );
        assert_eq!(runs, 5);
        assert_eq!(seen, vec![(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)]);
        assert!(total.is_one());
    }

    #[test]
    fn exhaust_without_choices_runs_once() {
        let mut denoms = Vec::new();
        let runs = exhaust(|_| (), |_, d| denoms.push(d.clone()));
        assert_eq!(runs, 1);
        assert!(denoms[0].is_one());
    }
}
