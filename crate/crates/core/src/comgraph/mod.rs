//! Commuting graphs: vertices are the non-central elements of a group, and
//! two distinct vertices are adjacent when they commute.
//!
//! In [`Mode::Transversal`] each coset `xZ(G)` of the center collapses to a
//! single vertex (its encoding-least non-central member). Distances between
//! distinct cosets are the same as in the full graph, so the diameter agrees
//! whenever there are at least two cosets.

mod bfs;
mod export;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use export::{to_dot, to_json};

use crate::error::{Error, Result};
use crate::groups::{ElementId, FiniteGroup};
use bfs::Csr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Full,
    Transversal,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Full => "full",
            Mode::Transversal => "transversal",
        })
    }
}

/// A graph distance: a finite length or the explicit infinity of separated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Distance::Infinite
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Distance::Finite(n as usize)),
            Raw::Text(t) if t == "infinity" => Ok(Distance::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad distance {t:?}"))),
        }
    }
}

/// Outcome of an exact diameter computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiameterReport {
    pub connected: bool,
    pub diameter: Distance,
    /// Endpoints attaining the diameter, or least vertices of the first two
    /// components when the graph is disconnected.
    pub witness_pair: (ElementId, ElementId),
    /// A shortest path between the witnesses; empty when disconnected.
    pub witness_path: Vec<ElementId>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub elapsed_ms: f64,
}

const NOT_A_VERTEX: u32 = u32::MAX;

pub struct CommutingGraph<'g> {
    group: &'g FiniteGroup,
    mode: Mode,
    vertices: Vec<ElementId>,
    vertex_of: Vec<u32>,
    words: usize,
    rows: Vec<u64>,
    csr: Csr,
    edge_count: usize,
}

impl<'g> CommutingGraph<'g> {
    /// Builds the commuting graph of `group`. Fails with [`Error::EmptyGraph`]
    /// for abelian groups.
    pub fn build(group: &'g FiniteGroup, mode: Mode) -> Result<Self> {
        if group.is_abelian() {
            return Err(Error::EmptyGraph);
        }
        let (vertices, vertex_of) = match mode {
            Mode::Full => {
                let vertices: Vec<ElementId> =
                    group.ids().filter(|&x| !group.is_central(x)).collect();
                let mut vertex_of = vec![NOT_A_VERTEX; group.order()];
                for (i, &x) in vertices.iter().enumerate() {
                    vertex_of[x] = i as u32;
                }
                (vertices, vertex_of)
            }
            Mode::Transversal => transversal(group),
        };
        // one coset only would make every non-central element commute with all of G
        assert!(vertices.len() >= 2, "a non-abelian group has at least two non-central cosets");

        let n = vertices.len();
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        rows.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
            let a = group.encoding(vertices[i]);
            for j in i + 1..n {
                if group.repr().commutes(a, group.encoding(vertices[j])) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
        });
        let mut edge_count = 0;
        for i in 0..n {
            for w in (i / 64)..words {
                let mut bits = rows[i * words + w];
                while bits != 0 {
                    let j = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if j > i {
                        rows[j * words + i / 64] |= 1 << (i % 64);
                        edge_count += 1;
                    }
                }
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(2 * edge_count);
        offsets.push(0);
        for i in 0..n {
            for (w, &word) in rows[i * words..(i + 1) * words].iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    targets.push((w * 64 + bits.trailing_zeros() as usize) as u32);
                    bits &= bits - 1;
                }
            }
            offsets.push(targets.len());
        }
        Ok(CommutingGraph {
            group,
            mode,
            vertices,
            vertex_of,
            words,
            rows,
            csr: Csr { offsets, targets },
            edge_count,
        })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Element ids of the vertices, in increasing order.
    pub fn vertices(&self) -> &[ElementId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Vertex index holding element `x`, or `None` when `x` is central.
    pub fn vertex_of(&self, x: ElementId) -> Option<usize> {
        match self.vertex_of[x] {
            NOT_A_VERTEX => None,
            v => Some(v as usize),
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.csr.neighbors(v).iter().map(|&u| u as usize)
    }

    /// Edges as vertex index pairs `(i, j)` with `i < j`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |i| {
            self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j))
        })
    }

    fn vertex_checked(&self, x: ElementId) -> Result<usize> {
        self.vertex_of(x).ok_or(Error::CentralVertex(x))
    }

    fn path_to(&self, parent: &[u32], from: usize, to: usize) -> Vec<ElementId> {
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v] as usize;
            path.push(v);
        }
        path.reverse();
        path.into_iter().map(|v| self.vertices[v]).collect()
    }

    /// Shortest-path distance between the vertices holding `u` and `v`, with
    /// a path of element ids from `u` to `v`.
    pub fn distance(&self, u: ElementId, v: ElementId) -> Result<(Distance, Vec<ElementId>)> {
        let su = self.vertex_checked(u)?;
        let sv = self.vertex_checked(v)?;
        if su == sv {
            return Ok((Distance::Finite(0), vec![u]));
        }
        let (dist, parent) = bfs::single_source(&self.csr, su);
        if dist[sv] == u32::MAX {
            return Ok((Distance::Infinite, Vec::new()));
        }
        let mut path = self.path_to(&parent, su, sv);
        // every member of a coset has the same neighbours as its representative
        path[0] = u;
        *path.last_mut().unwrap() = v;
        Ok((Distance::Finite(dist[sv] as usize), path))
    }

    /// Distances from the vertex holding `u` to every vertex.
    pub fn distances_from(&self, u: ElementId) -> Result<Vec<Distance>> {
        let su = self.vertex_checked(u)?;
        let (dist, _) = bfs::single_source(&self.csr, su);
        Ok(dist
            .into_iter()
            .map(|d| if d == u32::MAX { Distance::Infinite } else { Distance::Finite(d as usize) })
            .collect())
    }

    /// Largest distance between two members of `set`, every member non-central.
    pub fn max_distance_within(&self, set: &[ElementId]) -> Result<Distance> {
        let vs: Vec<u32> = set
            .iter()
            .map(|&x| self.vertex_checked(x).map(|v| v as u32))
            .collect::<Result<_>>()?;
        let mut member = vec![false; self.vertex_count()];
        for &v in &vs {
            member[v as usize] = true;
        }
        let results: Vec<(u32, u32)> = vs
            .par_chunks(64)
            .map(|batch| {
                let mut worst = 0u32;
                let mut hits = vec![0u32; batch.len()];
                bfs::multi_source_bfs(&self.csr, batch, |level, v, mut bits| {
                    if member[v] {
                        while bits != 0 {
                            hits[bits.trailing_zeros() as usize] += 1;
                            bits &= bits - 1;
                        }
                        worst = worst.max(level);
                    }
                });
                (worst, *hits.iter().min().unwrap_or(&0))
            })
            .collect();
        let distinct = member.iter().filter(|&&m| m).count() as u32;
        if results.iter().any(|&(_, h)| h < distinct) {
            return Ok(Distance::Infinite);
        }
        Ok(Distance::Finite(results.iter().map(|&(w, _)| w).max().unwrap_or(0) as usize))
    }

    /// Eccentricity of the vertex holding `u`.
    pub fn eccentricity(&self, u: ElementId) -> Result<Distance> {
        Ok(self.distances_from(u)?.into_iter().max().unwrap_or(Distance::Finite(0)))
    }

    /// Connected components as sorted lists of vertex element ids, ordered by least member.
    pub fn components(&self) -> Vec<Vec<ElementId>> {
        let (labels, count) = bfs::component_labels(&self.csr);
        let mut comps = vec![Vec::new(); count];
        for (v, &l) in labels.iter().enumerate() {
            comps[l as usize].push(self.vertices[v]);
        }
        comps
    }

    /// Exact diameter by breadth-first search from every vertex.
    pub fn diameter(&self) -> DiameterReport {
        let start = Instant::now();
        let (labels, component_count) = bfs::component_labels(&self.csr);
        let n = self.vertex_count();
        let mut report = DiameterReport {
            connected: component_count == 1,
            diameter: Distance::Infinite,
            witness_pair: (0, 0),
            witness_path: Vec::new(),
            vertex_count: n,
            edge_count: self.edge_count,
            component_count,
            elapsed_ms: 0.0,
        };
        if component_count > 1 {
            let other = labels.iter().position(|&l| l == 1).unwrap();
            report.witness_pair = (self.vertices[0], self.vertices[other]);
        } else {
            let ecc = bfs::all_eccentricities(&self.csr);
            let diam = ecc.iter().map(|e| e.ecc).max().unwrap_or(0);
            let src = ecc.iter().position(|e| e.ecc == diam).unwrap();
            let dst = ecc[src].far as usize;
            let (_, parent) = bfs::single_source(&self.csr, src);
            report.diameter = Distance::Finite(diam as usize);
            report.witness_pair = (self.vertices[src], self.vertices[dst]);
            report.witness_path = self.path_to(&parent, src, dst);
        }
        report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        report
    }
}

/// One vertex per non-central coset of the center, represented by the
/// encoding-least member; vertices are listed in increasing id order.
fn transversal(group: &FiniteGroup) -> (Vec<ElementId>, Vec<u32>) {
    let center = group.center();
    let mut coset_rep = vec![NOT_A_VERTEX; group.order()];
    let mut reps = Vec::new();
    for x in group.ids() {
        if group.is_central(x) || coset_rep[x] != NOT_A_VERTEX {
            continue;
        }
        let members: Vec<ElementId> = center.iter().map(|&z| group.multiply(x, z)).collect();
        let rep = *members
            .iter()
            .min_by(|&&a, &&b| group.encoding(a).cmp(group.encoding(b)))
            .unwrap();
        for &m in &members {
            coset_rep[m] = rep as u32;
        }
        reps.push(rep);
    }
    reps.sort_unstable();
    let mut index_of_rep = vec![NOT_A_VERTEX; group.order()];
    for (i, &r) in reps.iter().enumerate() {
        index_of_rep[r] = i as u32;
    }
    let vertex_of = coset_rep
        .iter()
        .map(|&r| if r == NOT_A_VERTEX { NOT_A_VERTEX } else { index_of_rep[r as usize] })
        .collect();
    (reps, vertex_of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{standard_group, ult, StandardGroup};
    use crate::groups::DEFAULT_MAX_ORDER as CAP;

    #[test]
    fn abelian_group_has_empty_graph() {
        let g = standard_group(StandardGroup::Cyclic(6), CAP).unwrap();
        assert_eq!(CommutingGraph::build(&g, Mode::Full).err(), Some(Error::EmptyGraph));
        assert_eq!(CommutingGraph::build(&g, Mode::Transversal).err(), Some(Error::EmptyGraph));
    }

    #[test]
    fn symmetric_three_components() {
        let g = standard_group(StandardGroup::Symmetric(3), CAP).unwrap();
        let graph = CommutingGraph::build(&g, Mode::Full).unwrap();
        assert_eq!(graph.vertex_count(), 5);
        let comps = graph.components();
        assert_eq!(comps.len(), 4);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 2]);
        let r = graph.diameter();
        assert!(!r.connected);
        assert_eq!(r.diameter, Distance::Infinite);
        assert_eq!(r.component_count, 4);
    }

    #[test]
    fn ult33_transversal_vertex_count() {
        let g = ult(3, 3, CAP).unwrap();
        let graph = CommutingGraph::build(&g, Mode::Transversal).unwrap();
        assert_eq!(graph.vertex_count(), 8);
    }

    #[test]
    fn same_coset_distance_zero_and_central_rejected() {
        let g = ult(3, 3, CAP).unwrap();
        let graph = CommutingGraph::build(&g, Mode::Transversal).unwrap();
        let x = g.ids().find(|&x| !g.is_central(x)).unwrap();
        let z = g.center()[1];
        let (d, path) = graph.distance(x, g.multiply(x, z)).unwrap();
        assert_eq!(d, Distance::Finite(0));
        assert_eq!(path.len(), 1);
        assert_eq!(graph.distance(z, x).unwrap_err(), Error::CentralVertex(z));
    }

    #[test]
    fn distance_serialization() {
        assert_eq!(serde_json::to_string(&Distance::Finite(6)).unwrap(), "6");
        assert_eq!(serde_json::to_string(&Distance::Infinite).unwrap(), "\"infinity\"");
        let d: Distance = serde_json::from_str("\"infinity\"").unwrap();
        assert_eq!(d, Distance::Infinite);
        assert!(Distance::Finite(100) < Distance::Infinite);
    }
}
