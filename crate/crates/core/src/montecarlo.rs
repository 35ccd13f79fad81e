//! Seeded, sharded Monte Carlo estimation of the expected face count.
//!
//! The sample budget is split over a fixed number of shards. Shard `i`
//! draws from its own ChaCha8 stream seeded with [`shard_seed`]`(seed, i)`,
//! and the integer face sums are merged in shard order, so the report
//! depends only on the graph, the sample count and the seed.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::choice::RngChooser;
use crate::embed::{count_faces, fill_random_rotation};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::rational::{decimal, to_f64};

pub const SHARDS: u64 = 64;

/// splitmix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of shard `shard` under master seed `seed`:
/// `mix64(mix64(seed) ^ shard)`.
pub fn shard_seed(seed: u64, shard: u64) -> u64 {
    mix64(mix64(seed) ^ shard)
}

fn serialize_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EstimateReport {
    pub samples: u64,
    pub seed: u64,
    #[serde(serialize_with = "serialize_ratio")]
    pub mean: BigRational,
    pub mean_decimal: String,
    /// Unbiased sample variance.
    #[serde(serialize_with = "serialize_ratio")]
    pub variance: BigRational,
    pub standard_error: f64,
    pub min_faces: usize,
    pub max_faces: usize,
}

impl EstimateReport {
    pub fn mean_f64(&self) -> f64 {
        to_f64(&self.mean)
    }

    /// `|mean - target| <= k * SE`
    pub fn within(&self, target: &BigRational, k: f64) -> bool {
        (self.mean_f64() - to_f64(target)).abs() <= k * self.standard_error
    }
}

#[derive(Clone, Copy, Default)]
struct Moments {
    n: u64,
    sum: u128,
    sum_sq: u128,
    min: usize,
    max: usize,
}

impl Moments {
    fn push(&mut self, x: usize) {
        if self.n == 0 {
            self.min = x;
            self.max = x;
        }
        self.n += 1;
        self.sum += x as u128;
        self.sum_sq += (x as u128) * (x as u128);
        self.min = self.min.min(x);
        self.max = self.max.max(x);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        Moments {
            n: self.n + other.n,
            sum: self.sum + other.sum,
            sum_sq: self.sum_sq + other.sum_sq,
            min: self.min.min(other.min),
            max: self.max.max(other.max),
        }
    }
}

fn run_shard(g: &Multigraph, samples: u64, seed: u64) -> Moments {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chooser = RngChooser(&mut rng);
    let mut succ = vec![0; g.dart_count()];
    let mut seen = vec![false; g.dart_count()];
    let mut m = Moments::default();
    for _ in 0..samples {
        fill_random_rotation(g, &mut chooser, &mut succ);
        m.push(count_faces(g, &succ, &mut seen));
    }
    m
}

/// Mean face count over `samples` independent uniform embeddings.
pub fn monte_carlo_faces(g: &Multigraph, samples: u64, seed: u64) -> Result<EstimateReport> {
    if samples < 2 {
        return Err(Error::Precondition(format!(
            "Monte Carlo needs at least 2 samples, got {samples}"
        )));
    }
    let per = samples / SHARDS;
    let extra = samples % SHARDS;
    let shards: Vec<Moments> = (0..SHARDS)
        .into_par_iter()
        .map(|i| run_shard(g, per + u64::from(i < extra), shard_seed(seed, i)))
        .collect();
    let m = shards.into_iter().fold(Moments::default(), Moments::merge);

    let n = BigInt::from(m.n);
    let sum = BigInt::from(m.sum);
    let sum_sq = BigInt::from(m.sum_sq);
    let mean = BigRational::new(sum.clone(), n.clone());
    let variance = BigRational::new(&n * sum_sq - &sum * &sum, &n * (&n - 1));
    let standard_error = (to_f64(&variance) / m.n as f64).sqrt();
    Ok(EstimateReport {
        samples,
        seed,
        mean_decimal: decimal(&mean),
        mean,
        variance,
        standard_error,
        min_faces: m.min,
        max_faces: m.max,
    })
}
