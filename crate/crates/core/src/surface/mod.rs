//! Surface codes from cellulations of closed surfaces.
//!
//! Qubits sit on edges. Each face gives an X-type generator on its boundary
//! edges and each vertex a Z-type generator on its incident edges. Only
//! mod-2 incidence data is used, so a [`Cellulation`] is a list of edges and
//! a list of faces written as closed edge walks.

pub mod text;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVector};
use crate::pauli::{PauliOperator, Sign};
use crate::stabilizer::StabilizerGroup;

/// A closed-surface cellulation with 0-based vertex, edge and face ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cellulation {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

/// Vertices visited by a face walk: `walk[i]` is the tail of `face[i]`.
fn face_walk(edges: &[(usize, usize)], face: &[usize]) -> Option<Vec<usize>> {
    let (u0, v0) = edges[face[0]];
    'start: for start in [u0, v0] {
        let mut walk = Vec::with_capacity(face.len());
        let mut cur = start;
        for &e in face {
            walk.push(cur);
            let (u, v) = edges[e];
            cur = if u == cur {
                v
            } else if v == cur {
                u
            } else {
                continue 'start;
            };
        }
        if cur == start {
            return Some(walk);
        }
    }
    None
}

impl Cellulation {
    /// Validates and builds a cellulation.
    ///
    /// Rejects self-loops, faces that are not closed walks or that repeat
    /// an edge, edges not lying on exactly two faces, and disconnected
    /// vertex graphs. Every vertex link must be a single cycle of corners.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>, faces: Vec<Vec<usize>>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::Cellulation("no vertices".into()));
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::Cellulation(format!(
                    "edge {} names a vertex outside 1..={num_vertices}",
                    i + 1
                )));
            }
            if u == v {
                return Err(Error::Cellulation(format!("edge {} is a self-loop at vertex {}", i + 1, u + 1)));
            }
        }
        let mut uses = vec![0usize; edges.len()];
        for (f, face) in faces.iter().enumerate() {
            if face.is_empty() {
                return Err(Error::Cellulation(format!("face {} has no edges", f + 1)));
            }
            let mut seen = std::collections::BTreeSet::new();
            for &e in face {
                if e >= edges.len() {
                    return Err(Error::Cellulation(format!(
                        "face {} names edge {} outside 1..={}",
                        f + 1,
                        e + 1,
                        edges.len()
                    )));
                }
                if !seen.insert(e) {
                    return Err(Error::Cellulation(format!("face {} repeats edge {}", f + 1, e + 1)));
                }
                uses[e] += 1;
            }
            if face_walk(&edges, face).is_none() {
                return Err(Error::Cellulation(format!("face {} is not a closed edge walk", f + 1)));
            }
        }
        if let Some(e) = uses.iter().position(|&c| c != 2) {
            return Err(Error::Cellulation(format!(
                "edge {} lies on {} faces; a closed surface needs exactly 2",
                e + 1,
                uses[e]
            )));
        }
        let c = Self {
            num_vertices,
            edges,
            faces,
        };
        c.check_connected()?;
        for v in 0..num_vertices {
            c.rotation(v)?;
        }
        Ok(c)
    }

    fn check_connected(&self) -> Result<()> {
        let mut adjacent = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adjacent[u].push(v);
            adjacent[v].push(u);
        }
        let mut seen = vec![false; self.num_vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adjacent[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(Error::Cellulation(format!(
                "vertex {} is not connected to vertex 1",
                v + 1
            ))),
            None => Ok(()),
        }
    }

    /// Corners at each vertex: `(face, edge in, edge out)`.
    fn corners(&self) -> Vec<Vec<(usize, usize, usize)>> {
        let mut out = vec![Vec::new(); self.num_vertices];
        for (f, face) in self.faces.iter().enumerate() {
            let walk = face_walk(&self.edges, face).expect("validated face");
            let k = face.len();
            for i in 0..k {
                // face[i] ends at the tail of face[i + 1]
                let at = walk[(i + 1) % k];
                out[at].push((f, face[i], face[(i + 1) % k]));
            }
        }
        out
    }

    /// Edges around vertex `v` in cyclic order, with the face between each
    /// consecutive pair: `(edges, faces)` where `faces[i]` joins `edges[i]`
    /// and `edges[i + 1]`.
    fn rotation(&self, v: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        let corners = &self.corners()[v];
        if corners.is_empty() {
            return Err(Error::Cellulation(format!("vertex {} has no incident faces", v + 1)));
        }
        let mut used = vec![false; corners.len()];
        let mut edges = vec![corners[0].1];
        let mut faces = Vec::new();
        let mut cur = 0;
        loop {
            used[cur] = true;
            let (f, a, b) = corners[cur];
            let next_edge = if a == *edges.last().expect("nonempty") { b } else { a };
            faces.push(f);
            if next_edge == edges[0] && used.iter().all(|&u| u) {
                break;
            }
            match (0..corners.len()).find(|&j| !used[j] && (corners[j].1 == next_edge || corners[j].2 == next_edge)) {
                Some(j) => {
                    edges.push(next_edge);
                    cur = j;
                }
                None => {
                    return Err(Error::Cellulation(format!(
                        "the faces around vertex {} do not form a single disc",
                        v + 1
                    )))
                }
            }
        }
        Ok((edges, faces))
    }

    #[must_use]
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    #[must_use]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[must_use]
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    #[must_use]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[must_use]
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// `|V| - |E| + |F|`.
    #[must_use]
    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Number of edge ends at each vertex.
    #[must_use]
    pub fn valences(&self) -> Vec<usize> {
        let mut val = vec![0; self.num_vertices];
        for &(u, v) in &self.edges {
            val[u] += 1;
            val[v] += 1;
        }
        val
    }

    #[must_use]
    pub fn face_sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    #[must_use]
    pub fn min_valence(&self) -> usize {
        self.valences().into_iter().min().unwrap_or(0)
    }

    /// The dual cellulation: a vertex per face, an edge per edge joining its
    /// two faces, and a face per vertex walking around its star.
    #[must_use]
    pub fn dual(&self) -> Self {
        let mut sides: Vec<Vec<usize>> = vec![Vec::new(); self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for &e in face {
                sides[e].push(f);
            }
        }
        let edges = sides.iter().map(|s| (s[0], s[1])).collect();
        let faces = (0..self.num_vertices)
            .map(|v| self.rotation(v).expect("validated cellulation").0)
            .collect();
        Self::new(self.faces.len(), edges, faces).expect("dual of a closed cellulation is closed")
    }

    /// Inserts a new vertex in the middle of `edge`. The first half keeps
    /// the edge id; the second half gets the next free id.
    pub fn subdivide_edge(&self, edge: usize) -> Result<Self> {
        if edge >= self.edges.len() {
            return Err(Error::IndexOutOfRange {
                index: edge,
                bound: self.edges.len(),
            });
        }
        let (u, v) = self.edges[edge];
        let mid = self.num_vertices;
        let fresh = self.edges.len();
        let mut edges = self.edges.clone();
        edges[edge] = (u, mid);
        edges.push((mid, v));
        let faces = self
            .faces
            .iter()
            .map(|face| {
                let walk = face_walk(&self.edges, face).expect("validated face");
                let mut out = Vec::with_capacity(face.len() + 1);
                for (i, &e) in face.iter().enumerate() {
                    if e != edge {
                        out.push(e);
                    } else if walk[i] == u {
                        out.extend([edge, fresh]);
                    } else {
                        out.extend([fresh, edge]);
                    }
                }
                out
            })
            .collect();
        Self::new(self.num_vertices + 1, edges, faces)
    }

    /// Mod-2 boundary matrices.
    #[must_use]
    pub fn boundary_matrices(&self) -> BoundaryPair {
        let e = self.edges.len();
        let mut dx = BitMatrix::zeros(e, self.faces.len());
        for (f, face) in self.faces.iter().enumerate() {
            for &edge in face {
                dx.set(edge, f, true);
            }
        }
        let mut dz = BitMatrix::zeros(e, self.num_vertices);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            dz.set(i, u, true);
            dz.set(i, v, true);
        }
        BoundaryPair { dx, dz }
    }

    /// `dim H₁(Γ; F₂) = |E| - rank D_X - rank D_Z`.
    #[must_use]
    pub fn dim_h1(&self) -> usize {
        let b = self.boundary_matrices();
        self.edges.len() - b.dx.rank() - b.dz.rank()
    }

    /// All face operators then all vertex operators, signs `+`, before any
    /// redundancy is removed.
    #[must_use]
    pub fn code_generators(&self) -> Vec<PauliOperator> {
        let n = self.edges.len();
        let b = self.boundary_matrices();
        let x_rows = b.dx.transpose().into_rows();
        let z_rows = b.dz.transpose().into_rows();
        x_rows
            .into_iter()
            .map(|x| PauliOperator::hermitian(x, BitVector::zeros(n), Sign::Plus))
            .chain(
                z_rows
                    .into_iter()
                    .map(|z| PauliOperator::hermitian(BitVector::zeros(n), z, Sign::Plus)),
            )
            .collect()
    }

    /// The surface code; qubit `i` is edge `i`.
    pub fn build_code(&self) -> Result<StabilizerGroup> {
        StabilizerGroup::validate(self.edges.len(), &self.code_generators())
    }
}

/// `D_X` (`|E| × |F|`, faces' boundary edges) and `D_Z` (`|E| × |V|`,
/// vertices' incident edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryPair {
    pub dx: BitMatrix,
    pub dz: BitMatrix,
}

impl BoundaryPair {
    /// Whether `D_Xᵀ D_Z = 0`, i.e. every face operator commutes with every
    /// vertex operator.
    #[must_use]
    pub fn faces_commute_with_stars(&self) -> bool {
        self.dx.transpose().mul(&self.dz).expect("both have |E| rows").is_zero()
    }
}

/// `L × L` square cellulation of the torus.
///
/// Vertex `(i, j)` is `iL + j`; the horizontal edge leaving it is `iL + j`
/// and the vertical one `L² + iL + j`; face `(i, j)` has corner `(i, j)`.
pub fn toric(l: usize) -> Result<Cellulation> {
    if l < 2 {
        return Err(Error::Precondition(format!("toric lattice size must be at least 2, got {l}")));
    }
    let vertex = |i: usize, j: usize| (i % l) * l + (j % l);
    let h = |i: usize, j: usize| (i % l) * l + (j % l);
    let v = |i: usize, j: usize| l * l + (i % l) * l + (j % l);
    let mut edges = vec![(0, 0); 2 * l * l];
    for i in 0..l {
        for j in 0..l {
            edges[h(i, j)] = (vertex(i, j), vertex(i, j + 1));
            edges[v(i, j)] = (vertex(i, j), vertex(i + 1, j));
        }
    }
    let mut faces = Vec::with_capacity(l * l);
    for i in 0..l {
        for j in 0..l {
            faces.push(vec![h(i, j), v(i, j + 1), h(i + 1, j), v(i, j)]);
        }
    }
    Cellulation::new(l * l, edges, faces)
}

/// Sphere of two vertices joined by three parallel edges, with three
/// two-sided faces.
#[must_use]
pub fn theta() -> Cellulation {
    Cellulation::new(2, vec![(0, 1); 3], vec![vec![0, 1], vec![1, 2], vec![2, 0]]).expect("valid theta graph")
}

/// Boundary of the unit cube: vertex `b` has coordinates given by the
/// bits of `b`.
#[must_use]
pub fn cube() -> Cellulation {
    let mut edges = Vec::new();
    let mut index = BTreeMap::new();
    for a in 0..8usize {
        for bit in 0..3 {
            let b = a ^ (1 << bit);
            if a < b {
                index.insert((a, b), edges.len());
                edges.push((a, b));
            }
        }
    }
    let edge = |a: usize, b: usize| index[&(a.min(b), a.max(b))];
    let mut faces = Vec::new();
    for axis in 0..3 {
        for side in 0..2 {
            let others: Vec<usize> = (0..3).filter(|&k| k != axis).collect();
            let base = side << axis;
            let (p, q) = (1 << others[0], 1 << others[1]);
            let ring = [base, base | p, base | p | q, base | q];
            faces.push((0..4).map(|i| edge(ring[i], ring[(i + 1) % 4])).collect());
        }
    }
    Cellulation::new(8, edges, faces).expect("valid cube")
}

/// A sphere whose code has `δ = 2` although every vertex has valence at
/// least 3 and every face has at least 3 sides.
///
/// Two vertices `a`, `b` are joined by two equator edges (ids 0 and 1).
/// Each hemisphere is a disc triangulated with two interior vertices, so
/// the equator bounds: the product of one hemisphere's face operators is
/// X on the two equator edges.
#[must_use]
pub fn valence_counterexample() -> Cellulation {
    // vertices: a b c d c' d'
    let edges = vec![
        (0, 1), // equator
        (0, 1), // equator
        (0, 2),
        (1, 2),
        (0, 3),
        (1, 3),
        (2, 3),
        (0, 4),
        (1, 4),
        (0, 5),
        (1, 5),
        (4, 5),
    ];
    let faces = vec![
        vec![0, 3, 2],
        vec![1, 5, 4],
        vec![2, 6, 4],
        vec![3, 6, 5],
        vec![0, 8, 7],
        vec![1, 10, 9],
        vec![7, 11, 9],
        vec![8, 11, 10],
    ];
    Cellulation::new(6, edges, faces).expect("valid counterexample")
}
