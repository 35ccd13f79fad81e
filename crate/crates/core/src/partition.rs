//! Integer partitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of `weight()` into positive parts, stored weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    pub fn without_ones(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|&p| p > 1).collect(),
        }
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Exponent notation, e.g. `5 4^3 2^2`.
    pub fn to_exponent_string(&self) -> String {
        self.multiplicities()
            .into_iter()
            .map(|(p, m)| {
                if m == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Partition {
    /// Comma form, e.g. `5,4,4,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts the comma form `5,4,4,2` and the exponent form `5 4^3 2^2`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in s.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let (base, reps) = match token.split_once('^') {
                Some((b, r)) => (b, r),
                None => (token, "1"),
            };
            let bad = |what: &str| Error::Parse(format!("bad {what} in partition token {token:?}"));
            let base: usize = base.trim().parse().map_err(|_| bad("part"))?;
            let reps: usize = reps.trim().parse().map_err(|_| bad("exponent"))?;
            if base == 0 || reps == 0 {
                return Err(bad("zero"));
            }
            parts.extend(std::iter::repeat_n(base, reps));
        }
        if parts.is_empty() {
            return Err(Error::Parse(format!("empty partition {s:?}")));
        }
        Partition::new(parts)
    }
}

/// Iterates over the partitions of `n` in lexicographically decreasing order,
/// starting with `(n)` and ending with `(1, .., 1)`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Find the rightmost part larger than 1, decrement it, and refill the
        // remainder with parts as large as allowed.
        let mut succ = current.clone();
        let mut ones = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            ones += 1;
        }
        if let Some(last) = succ.pop() {
            let k = last - 1;
            let mut rest = ones + 1;
            succ.push(k);
            while rest > 0 {
                let p = rest.min(k);
                succ.push(p);
                rest -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// Number of permutations of cycle type `lambda`:
/// `n! / (prod parts * prod multiplicity!)`.
pub fn conj_class_size(lambda: &Partition) -> BigUint {
    let n = lambda.weight();
    let mut denom = BigUint::one();
    for (p, m) in lambda.multiplicities() {
        for _ in 0..m {
            denom *= p;
        }
        denom *= factorial(m);
    }
    factorial(n) / denom
}

/// `p(0), ..., p(n)` from Euler's pentagonal number recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigUint> = Vec::with_capacity(n + 1);
    p.push(BigUint::one());
    for m in 1..=n {
        let (mut plus, mut minus) = (BigUint::default(), BigUint::default());
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &p[m - g1];
            if g2 <= m {
                *acc += &p[m - g2];
            }
        }
        p.push(plus - minus);
    }
    p
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}
