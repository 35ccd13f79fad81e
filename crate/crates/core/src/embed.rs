//! Rotation systems, face tracing, and random embeddings.
//!
//! A rotation system is stored as one permutation `succ` of all darts whose
//! cycles are the local rotations. Faces are the cycles of
//! `d -> succ[mate(d)]`: leave along the edge, then turn to the next dart in
//! the rotation at the far end. The mirror convention `succ` then `mate`
//! gives the inverse face permutation and hence the same face count.

use rand::Rng;
use serde::Serialize;

use crate::choice::{Chooser, RngChooser};
use crate::error::{Error, Result};
use crate::graph::{Dart, Multigraph, Vertex};
use crate::perm::{random_cyclic_order, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RotationSystem {
    succ: Vec<Dart>,
}

impl RotationSystem {
    /// Validates that `succ` restricts to a single cycle on the darts of
    /// every vertex.
    pub fn from_successors(g: &Multigraph, succ: Vec<Dart>) -> Result<Self> {
        let rot = RotationSystem { succ };
        rot.validate(g)?;
        Ok(rot)
    }

    /// One cyclic order per vertex, listing every dart at that vertex once.
    pub fn from_cyclic_orders<O: AsRef<[Dart]>>(g: &Multigraph, orders: &[O]) -> Result<Self> {
        if orders.len() != g.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} vertex rotations given for {} vertices",
                orders.len(),
                g.vertex_count()
            )));
        }
        let mut succ = vec![usize::MAX; g.dart_count()];
        for order in orders {
            let order = order.as_ref();
            for (i, &d) in order.iter().enumerate() {
                if d >= succ.len() {
                    return Err(Error::InvalidRotation(format!("foreign dart {d}")));
                }
                succ[d] = order[(i + 1) % order.len()];
            }
        }
        Self::from_successors(g, succ)
    }

    fn validate(&self, g: &Multigraph) -> Result<()> {
        if self.succ.len() != g.dart_count() {
            return Err(Error::InvalidRotation(format!(
                "rotation covers {} darts, graph has {}",
                self.succ.len(),
                g.dart_count()
            )));
        }
        let mut hit = vec![false; self.succ.len()];
        for (d, &s) in self.succ.iter().enumerate() {
            if s >= self.succ.len() {
                return Err(Error::InvalidRotation(format!("dart {d} is missing")));
            }
            if g.tail(s) != g.tail(d) {
                return Err(Error::InvalidRotation(format!(
                    "dart {s} follows dart {d} but sits at another vertex"
                )));
            }
            if std::mem::replace(&mut hit[s], true) {
                return Err(Error::InvalidRotation(format!("dart {s} listed twice")));
            }
        }
        for v in 0..g.vertex_count() {
            let darts = g.darts_at(v);
            let mut len = 1;
            let mut d = self.succ[darts[0]];
            while d != darts[0] {
                len += 1;
                d = self.succ[d];
            }
            if len != darts.len() {
                return Err(Error::InvalidRotation(format!(
                    "rotation at vertex {} is not a single cycle",
                    g.label(v)
                )));
            }
        }
        Ok(())
    }

    pub fn successors(&self) -> &[Dart] {
        &self.succ
    }

    pub fn next(&self, d: Dart) -> Dart {
        self.succ[d]
    }

    /// The rotation at `v` starting from its least dart.
    pub fn cyclic_order(&self, g: &Multigraph, v: Vertex) -> Vec<Dart> {
        let first = g.darts_at(v)[0];
        let mut out = vec![first];
        let mut d = self.succ[first];
        while d != first {
            out.push(d);
            d = self.succ[d];
        }
        out
    }

    /// The rotation at `v` as a permutation of local indices into
    /// `g.darts_at(v)`.
    pub fn local_rotation(&self, g: &Multigraph, v: Vertex) -> Permutation {
        let darts = g.darts_at(v);
        let images = darts
            .iter()
            .map(|&d| local_index(darts, self.succ[d]))
            .collect();
        Permutation::from_images(images).expect("rotation restricts to a permutation")
    }
}

fn local_index(darts: &[Dart], d: Dart) -> usize {
    darts.binary_search(&d).expect("dart belongs to the vertex")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentFaces {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl ComponentFaces {
    /// `E - V + 2 - F`; twice the genus of a valid embedding.
    pub fn euler_gap(&self) -> i64 {
        self.edges as i64 - self.vertices as i64 + 2 - self.faces as i64
    }

    pub fn genus(&self) -> Option<u64> {
        let gap = self.euler_gap();
        (gap >= 0 && gap % 2 == 0).then_some(gap as u64 / 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceStructure {
    /// Dart cycles of the face permutation, each starting at its least dart.
    pub faces: Vec<Vec<Dart>>,
    pub components: Vec<ComponentFaces>,
}

impl FaceStructure {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Sum of component genera; `None` if some component violates Euler's
    /// formula.
    pub fn genus(&self) -> Option<u64> {
        self.components.iter().map(ComponentFaces::genus).sum()
    }
}

/// Traces the faces of `rot` and derives per-component genus.
pub fn trace_faces(g: &Multigraph, rot: &RotationSystem) -> Result<FaceStructure> {
    rot.validate(g)?;
    let succ = rot.successors();
    let mut seen = vec![false; g.dart_count()];
    let mut faces = Vec::new();
    for start in 0..g.dart_count() {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = succ[g.mate(d)];
        }
        faces.push(face);
    }

    let (comp, count) = g.components();
    let mut components = vec![
        ComponentFaces {
            vertices: 0,
            edges: 0,
            faces: 0
        };
        count
    ];
    for &c in &comp {
        components[c].vertices += 1;
    }
    for &(u, _) in g.edges() {
        components[comp[u]].edges += 1;
    }
    for face in &faces {
        components[comp[g.tail(face[0])]].faces += 1;
    }
    Ok(FaceStructure { faces, components })
}

/// Face count of a successor table; `seen` is scratch space of length
/// `g.dart_count()`.
pub(crate) fn count_faces(g: &Multigraph, succ: &[Dart], seen: &mut [bool]) -> usize {
    seen.fill(false);
    let mut count = 0;
    for start in 0..succ.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = succ[g.mate(d)];
        }
    }
    count
}

/// Writes an independent uniform rotation at every vertex into `succ`.
pub(crate) fn fill_random_rotation(g: &Multigraph, chooser: &mut impl Chooser, succ: &mut [Dart]) {
    for v in 0..g.vertex_count() {
        let order = random_cyclic_order(g.darts_at(v), chooser);
        for (i, &d) in order.iter().enumerate() {
            succ[d] = order[(i + 1) % order.len()];
        }
    }
}

/// A uniformly random rotation system of `g`.
pub fn random_embedding<R: Rng + ?Sized>(g: &Multigraph, rng: &mut R) -> RotationSystem {
    random_embedding_with(g, &mut RngChooser(rng))
}

pub fn random_embedding_with(g: &Multigraph, chooser: &mut impl Chooser) -> RotationSystem {
    let mut succ = vec![0; g.dart_count()];
    fill_random_rotation(g, chooser, &mut succ);
    RotationSystem { succ }
}

/// A rotation system of the subgraph of `graph` induced by the active
/// vertices. A dart is present when both ends of its edge are active.
#[derive(Clone, Debug)]
pub struct PartialEmbedding<'g> {
    graph: &'g Multigraph,
    active: Vec<bool>,
    succ: Vec<Option<Dart>>,
}

impl<'g> PartialEmbedding<'g> {
    /// No vertex active yet.
    pub fn empty(graph: &'g Multigraph) -> Self {
        PartialEmbedding {
            graph,
            active: vec![false; graph.vertex_count()],
            succ: vec![None; graph.dart_count()],
        }
    }

    /// Deletes the darts of every edge with an inactive end from `rot`.
    pub fn restrict(graph: &'g Multigraph, rot: &RotationSystem, active: &[bool]) -> Result<Self> {
        rot.validate(graph)?;
        if active.len() != graph.vertex_count() {
            return Err(Error::InvalidRotation(
                "activity mask has wrong length".into(),
            ));
        }
        let mut out = PartialEmbedding {
            graph,
            active: active.to_vec(),
            succ: vec![None; graph.dart_count()],
        };
        for v in (0..graph.vertex_count()).filter(|&v| active[v]) {
            let kept: Vec<Dart> = rot
                .cyclic_order(graph, v)
                .into_iter()
                .filter(|&d| out.is_present(d))
                .collect();
            for (i, &d) in kept.iter().enumerate() {
                out.succ[d] = Some(kept[(i + 1) % kept.len()]);
            }
        }
        Ok(out)
    }

    /// A uniform rotation system of the subgraph induced by `active`.
    pub fn random_on(graph: &'g Multigraph, active: &[bool], chooser: &mut impl Chooser) -> Self {
        let mut out = PartialEmbedding {
            graph,
            active: active.to_vec(),
            succ: vec![None; graph.dart_count()],
        };
        for v in (0..graph.vertex_count()).filter(|&v| active[v]) {
            let present: Vec<Dart> = out.present_darts_at(v);
            let order = random_cyclic_order(&present, chooser);
            for (i, &d) in order.iter().enumerate() {
                out.succ[d] = Some(order[(i + 1) % order.len()]);
            }
        }
        out
    }

    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    pub fn is_active(&self, v: Vertex) -> bool {
        self.active[v]
    }

    pub fn is_present(&self, d: Dart) -> bool {
        self.active[self.graph.tail(d)] && self.active[self.graph.head(d)]
    }

    pub fn present_darts_at(&self, v: Vertex) -> Vec<Dart> {
        self.graph
            .darts_at(v)
            .iter()
            .copied()
            .filter(|&d| self.is_present(d))
            .collect()
    }

    pub fn successor(&self, d: Dart) -> Option<Dart> {
        self.succ[d]
    }

    /// Attaches `v` to the current embedding.
    ///
    /// Every edge from `v` to an active vertex `u` has its dart at `u`
    /// inserted into one of the gaps of the rotation at `u`, chosen
    /// uniformly; a vertex without darts has a single gap. Parallel edges
    /// toward the same `u` are inserted one after another, so each insertion
    /// sees one more gap than the last. Then `v` gets a uniform cyclic
    /// order on its present darts.
    pub fn add_vertex(&mut self, v: Vertex, chooser: &mut impl Chooser) -> Result<()> {
        let g = self.graph;
        if v >= g.vertex_count() {
            return Err(Error::Precondition(format!(
                "vertex {v} is not in the graph"
            )));
        }
        if self.active[v] {
            return Err(Error::Precondition(format!(
                "vertex {} is already embedded",
                g.label(v)
            )));
        }
        if g.has_loop_at(v) {
            return Err(Error::Precondition(format!(
                "vertex {} carries a loop; attaching it is unsupported",
                g.label(v)
            )));
        }
        let mut own = Vec::new();
        for &d in g.darts_at(v) {
            let u = g.head(d);
            if !self.active[u] {
                continue;
            }
            own.push(d);
            let x = g.mate(d);
            let gaps: Vec<Dart> = g
                .darts_at(u)
                .iter()
                .copied()
                .filter(|&c| self.succ[c].is_some())
                .collect();
            if gaps.is_empty() {
                self.succ[x] = Some(x);
            } else {
                let after = gaps[chooser.choose(gaps.len())];
                self.succ[x] = self.succ[after];
                self.succ[after] = Some(x);
            }
        }
        let order = random_cyclic_order(&own, chooser);
        for (i, &d) in order.iter().enumerate() {
            self.succ[d] = Some(order[(i + 1) % order.len()]);
        }
        self.active[v] = true;
        Ok(())
    }

    pub fn is_complete(&self) -> bool {
        self.active.iter().all(|&a| a)
    }

    pub fn into_rotation_system(self) -> Result<RotationSystem> {
        if !self.is_complete() {
            return Err(Error::InvalidRotation(
                "some vertices have not been embedded".into(),
            ));
        }
        let succ = self
            .succ
            .into_iter()
            .map(|s| s.expect("complete"))
            .collect();
        RotationSystem::from_successors(self.graph, succ)
    }
}

/// Randomly attaches `v` to `partial` using `rng`.
pub fn add_vertex_randomly<R: Rng + ?Sized>(
    partial: &mut PartialEmbedding<'_>,
    v: Vertex,
    rng: &mut R,
) -> Result<()> {
    partial.add_vertex(v, &mut RngChooser(rng))
}

/// Embeds `g` by attaching the vertices one at a time in `order`.
pub fn build_incrementally(
    g: &Multigraph,
    order: &[Vertex],
    chooser: &mut impl Chooser,
) -> Result<RotationSystem> {
    let mut partial = PartialEmbedding::empty(g);
    for &v in order {
        partial.add_vertex(v, chooser)?;
    }
    partial.into_rotation_system()
}

/// The face permutation of `v` relative to `rot`, on local indices into
/// `g.darts_at(v)`.
///
/// From a dart `d` at `v`, walk the face of `rot` until the walk is about to
/// re-enter `v`; the dart it re-enters through is the image of `d`. The
/// cycles group the darts of `v` by the face of `rot` minus `v` they were
/// inserted into.
pub fn face_permutation_at(g: &Multigraph, rot: &RotationSystem, v: Vertex) -> Result<Permutation> {
    rot.validate(g)?;
    if g.has_loop_at(v) {
        return Err(Error::Precondition(format!(
            "vertex {} carries a loop",
            g.label(v)
        )));
    }
    let darts = g.darts_at(v);
    let images = darts
        .iter()
        .map(|&d| {
            let mut x = d;
            loop {
                let y = g.mate(x);
                if g.tail(y) == v {
                    return local_index(darts, y);
                }
                x = rot.next(y);
            }
        })
        .collect();
    Permutation::from_images(images)
}

/// The faces of `rot` restricted to the darts at `v`, as cycles of local
/// indices in facial order.
pub fn faces_at(g: &Multigraph, rot: &RotationSystem, v: Vertex) -> Result<Vec<Vec<usize>>> {
    let darts = g.darts_at(v);
    let faces = trace_faces(g, rot)?;
    Ok(faces
        .faces
        .iter()
        .map(|face| {
            face.iter()
                .filter(|&&d| g.tail(d) == v)
                .map(|&d| local_index(darts, d))
                .collect::<Vec<_>>()
        })
        .filter(|c| !c.is_empty())
        .collect())
}

/// Number of faces of `rot` that pass through `v`.
pub fn faces_containing(g: &Multigraph, succ: &[Dart], v: Vertex) -> usize {
    let mut seen = vec![false; g.dart_count()];
    let mut count = 0;
    for &start in g.darts_at(v) {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = succ[g.mate(d)];
        }
    }
    count
}
