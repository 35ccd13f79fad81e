//! Upper and lower bounds on the expected face count of a random embedding.
//!
//! The upper bounds build the graph one vertex at a time along an ordering
//! and charge each new vertex its expected number of incident faces, which
//! depends only on its back-degree. They need a connected simple graph: a
//! two-vertex multigraph already has more than one face on average, which
//! the base case of the induction does not allow for.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex};
use crate::rational::{dipole_center, harmonic, integer, ratio};

/// Bound on the expected number of faces through a vertex of degree `d`
/// attached to an embedding: `Delta_d` for `d <= 4`, `Delta_d + 1/(d+1)`
/// beyond, with `Delta_1 = 1`.
pub fn h_bound(d: usize) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::OutOfRange("h(d) needs d >= 1".into()));
    }
    let base = dipole_center(d);
    Ok(if d <= 4 { base } else { base + ratio(1, d + 1) })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderingReport {
    /// Vertices in insertion order.
    pub ordering: Vec<Vertex>,
    pub labels: Vec<String>,
    /// Number of edges to earlier vertices, with 0 replaced by 1.
    pub back_degrees: Vec<usize>,
    /// `back_degrees` with 2 replaced by e.
    pub adjusted: Vec<f64>,
}

impl OrderingReport {
    fn from_ordering(g: &Multigraph, ordering: Vec<Vertex>) -> Self {
        let mut position = vec![0; g.vertex_count()];
        for (i, &v) in ordering.iter().enumerate() {
            position[v] = i;
        }
        let back_degrees: Vec<usize> = ordering
            .iter()
            .map(|&v| {
                let back = g
                    .darts_at(v)
                    .iter()
                    .filter(|&&d| position[g.head(d)] < position[v])
                    .count();
                back.max(1)
            })
            .collect();
        let adjusted = back_degrees
            .iter()
            .map(|&d| {
                if d == 2 {
                    std::f64::consts::E
                } else {
                    d as f64
                }
            })
            .collect();
        OrderingReport {
            labels: ordering.iter().map(|&v| g.label(v).to_string()).collect(),
            ordering,
            back_degrees,
            adjusted,
        }
    }

    pub fn max_back_degree(&self) -> usize {
        self.back_degrees.iter().copied().max().unwrap_or(1)
    }
}

fn require_connected_simple(g: &Multigraph) -> Result<()> {
    let (_, components) = g.components();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    if !g.is_simple() {
        return Err(Error::Precondition(
            "the ordering bounds need a simple graph (no loops or parallel edges)".into(),
        ));
    }
    Ok(())
}

/// Smallest-last ordering: repeatedly delete a vertex of least remaining
/// degree (least index on ties) and insert in reverse deletion order. Its
/// largest back-degree is the degeneracy.
pub fn degeneracy_order(g: &Multigraph) -> Result<OrderingReport> {
    require_connected_simple(g)?;
    let n = g.vertex_count();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut deletion = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        deletion.push(v);
        for &d in g.darts_at(v) {
            let w = g.head(d);
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    deletion.reverse();
    Ok(OrderingReport::from_ordering(g, deletion))
}

/// An ordering given by vertex labels; every vertex exactly once.
pub fn ordering_from_labels<S: AsRef<str>>(g: &Multigraph, labels: &[S]) -> Result<OrderingReport> {
    require_connected_simple(g)?;
    let mut seen = vec![false; g.vertex_count()];
    let mut ordering = Vec::with_capacity(labels.len());
    for label in labels {
        let label = label.as_ref();
        let v = g
            .vertex_by_label(label)
            .ok_or_else(|| Error::Parse(format!("ordering names unknown vertex {label:?}")))?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Parse(format!("ordering repeats vertex {label:?}")));
        }
        ordering.push(v);
    }
    if ordering.len() != g.vertex_count() {
        return Err(Error::Parse(format!(
            "ordering lists {} of {} vertices",
            ordering.len(),
            g.vertex_count()
        )));
    }
    Ok(OrderingReport::from_ordering(g, ordering))
}

/// Ordering file: one vertex token per line; blank and `#` lines skipped.
pub fn parse_order_file(g: &Multigraph, text: &str) -> Result<OrderingReport> {
    let labels: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    ordering_from_labels(g, &labels)
}

fn check_order(g: &Multigraph, order: &OrderingReport) -> Result<()> {
    require_connected_simple(g)?;
    if order.ordering.len() != g.vertex_count() {
        return Err(Error::Precondition(
            "ordering does not match the graph".into(),
        ));
    }
    Ok(())
}

/// `1 + sum_(i>=3) ln d_i*`
pub fn face_bound_log(g: &Multigraph, order: &OrderingReport) -> Result<f64> {
    check_order(g, order)?;
    Ok(1.0 + order.adjusted.iter().skip(2).map(|d| d.ln()).sum::<f64>())
}

/// `1 + sum_(i>=3) H_(d_i - 1)`
pub fn face_bound_harmonic(g: &Multigraph, order: &OrderingReport) -> Result<BigRational> {
    check_order(g, order)?;
    Ok(order
        .back_degrees
        .iter()
        .skip(2)
        .fold(integer(1), |acc, &d| acc + harmonic(d - 1)))
}

/// Stahl's bound `2n + sum_v ln deg(v)`.
pub fn stahl_bound(g: &Multigraph) -> f64 {
    2.0 * g.vertex_count() as f64 + g.degrees().iter().map(|&d| (d as f64).ln()).sum::<f64>()
}

fn serialize_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleFamilyBound {
    pub cycles: usize,
    /// `sum_C 2 prod_(u in C) 1/(deg u - 1)`
    #[serde(serialize_with = "serialize_ratio")]
    pub exact: BigRational,
    /// `2 |C| / (d - 1)^l` with `d` the largest degree and `l` the longest
    /// cycle in the family.
    #[serde(serialize_with = "serialize_ratio")]
    pub coarse: BigRational,
    pub max_degree: usize,
    pub max_length: usize,
}

/// Lower bound from the probability that each listed cycle bounds a face.
pub fn cycle_family_lower_bound(
    g: &Multigraph,
    cycles: &[Vec<Vertex>],
) -> Result<CycleFamilyBound> {
    let mut exact = BigRational::zero();
    let mut max_degree = 0;
    let mut max_length = 0;
    for cycle in cycles {
        let show = || {
            cycle
                .iter()
                .map(|&v| g.label(v))
                .collect::<Vec<_>>()
                .join(" ")
        };
        if cycle.len() < 3 {
            return Err(Error::Precondition(format!(
                "cycle [{}] needs at least three vertices",
                show()
            )));
        }
        let mut distinct = cycle.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != cycle.len() {
            return Err(Error::Precondition(format!(
                "cycle [{}] repeats a vertex",
                show()
            )));
        }
        for (i, &u) in cycle.iter().enumerate() {
            let w = cycle[(i + 1) % cycle.len()];
            if g.multiplicity(u, w) == 0 {
                return Err(Error::Precondition(format!(
                    "cycle [{}] uses the missing edge {} {}",
                    show(),
                    g.label(u),
                    g.label(w)
                )));
            }
        }
        if cycle.iter().all(|&u| g.degree(u) == 2) {
            return Err(Error::Precondition(format!(
                "every vertex of cycle [{}] has degree 2",
                show()
            )));
        }
        let term = cycle
            .iter()
            .fold(integer(2), |acc, &u| acc * ratio(1, g.degree(u) - 1));
        exact += term;
        max_degree = max_degree.max(cycle.iter().map(|&u| g.degree(u)).max().unwrap_or(0));
        max_length = max_length.max(cycle.len());
    }
    let coarse = if cycles.is_empty() {
        BigRational::zero()
    } else {
        ratio(2 * cycles.len(), 1) / integer(max_degree - 1).pow(max_length as i32)
    };
    Ok(CycleFamilyBound {
        cycles: cycles.len(),
        exact,
        coarse,
        max_degree,
        max_length,
    })
}

/// Cycle file: one cycle per line as space-separated vertex tokens.
pub fn parse_cycles_file(g: &Multigraph, text: &str) -> Result<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cycle = line
            .split_whitespace()
            .map(|t| {
                g.vertex_by_label(t).ok_or_else(|| {
                    Error::Parse(format!("line {}: unknown vertex {t:?}", lineno + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(cycle);
    }
    Ok(out)
}
