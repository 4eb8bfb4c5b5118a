//! Breadth-first search kernels over a compressed adjacency.
//!
//! The all-sources search packs 64 sources into one machine word per vertex
//! and advances them together: a vertex joins the next frontier of source `s`
//! when bit `s` is set in the OR of its neighbours' frontier words. One pass
//! over the edge list therefore serves 64 searches.

use std::collections::VecDeque;

use rayon::prelude::*;

/// Adjacency in compressed sparse row form.
pub(crate) struct Csr {
    pub offsets: Vec<usize>,
    pub targets: Vec<u32>,
}

impl Csr {
    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Runs up to 64 searches at once. `visit(level, v, bits)` fires once per
/// level at which `v` is first reached by the sources whose indices are set
/// in `bits`.
pub(crate) fn multi_source_bfs(csr: &Csr, sources: &[u32], mut visit: impl FnMut(u32, usize, u64)) {
    assert!(sources.len() <= 64);
    let n = csr.len();
    let mut seen = vec![0u64; n];
    let mut frontier = vec![0u64; n];
    let mut next = vec![0u64; n];
    for (bit, &s) in sources.iter().enumerate() {
        seen[s as usize] |= 1 << bit;
        frontier[s as usize] |= 1 << bit;
    }
    for (v, &bits) in frontier.iter().enumerate() {
        if bits != 0 {
            visit(0, v, bits);
        }
    }
    let full = if sources.len() == 64 { u64::MAX } else { (1u64 << sources.len()) - 1 };
    let mut level = 0;
    loop {
        level += 1;
        let mut any = false;
        for v in 0..n {
            let s = seen[v];
            if s == full {
                next[v] = 0;
                continue;
            }
            let mut acc = 0u64;
            for &u in csr.neighbors(v) {
                acc |= frontier[u as usize];
            }
            let fresh = acc & !s;
            next[v] = fresh;
            if fresh != 0 {
                any = true;
                visit(level, v, fresh);
            }
        }
        if !any {
            break;
        }
        for v in 0..n {
            seen[v] |= next[v];
        }
        std::mem::swap(&mut frontier, &mut next);
    }
}

/// Per-source eccentricity summary.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Ecc {
    /// Largest finite distance from the source.
    pub ecc: u32,
    /// Least vertex at that distance.
    pub far: u32,
    /// Number of vertices reached, the source included.
    pub reached: usize,
}

/// Eccentricity of every vertex, computed in parallel batches of 64 sources.
pub(crate) fn all_eccentricities(csr: &Csr) -> Vec<Ecc> {
    let n = csr.len();
    let batches: Vec<Vec<u32>> = (0..n as u32)
        .collect::<Vec<_>>()
        .chunks(64)
        .map(|c| c.to_vec())
        .collect();
    batches
        .par_iter()
        .flat_map_iter(|batch| {
            let mut out: Vec<Ecc> = batch
                .iter()
                .map(|&s| Ecc { ecc: 0, far: s, reached: 0 })
                .collect();
            multi_source_bfs(csr, batch, |level, v, mut bits| {
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let e = &mut out[b];
                    e.reached += 1;
                    // vertices arrive in increasing order within a level
                    if level > e.ecc {
                        e.ecc = level;
                        e.far = v as u32;
                    }
                }
            });
            out
        })
        .collect()
}

/// Distances from `src`, `u32::MAX` where unreachable, plus BFS parents.
pub(crate) fn single_source(csr: &Csr, src: usize) -> (Vec<u32>, Vec<u32>) {
    let n = csr.len();
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(v) = queue.pop_front() {
        for &u in csr.neighbors(v) {
            let u = u as usize;
            if dist[u] == u32::MAX {
                dist[u] = dist[v] + 1;
                parent[u] = v as u32;
                queue.push_back(u);
            }
        }
    }
    (dist, parent)
}

/// Connected component label of every vertex; labels follow least members.
pub(crate) fn component_labels(csr: &Csr) -> (Vec<u32>, usize) {
    let n = csr.len();
    let mut label = vec![u32::MAX; n];
    let mut count = 0u32;
    let mut stack = Vec::new();
    for start in 0..n {
        if label[start] != u32::MAX {
            continue;
        }
        label[start] = count;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &u in csr.neighbors(v) {
                if label[u as usize] == u32::MAX {
                    label[u as usize] = count;
                    stack.push(u as usize);
                }
            }
        }
        count += 1;
    }
    (label, count as usize)
}
