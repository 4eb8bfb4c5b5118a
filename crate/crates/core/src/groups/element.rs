//! Decoded group elements.
//!
//! A [`GroupElement`] is the user-facing form of an element. Inside a
//! [`FiniteGroup`](super::FiniteGroup) every element is stored as a fixed-width
//! byte encoding produced by [`GroupElement::encode`]; two elements are equal
//! exactly when their encodings are equal.

use std::fmt;

/// A permutation of `{0, .., n-1}` acting on the right: point `i` maps to `images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    /// Builds a permutation from its image list. Returns `None` if `images`
    /// is not a bijection or has more than 256 points.
    pub fn new(images: Vec<u8>) -> Option<Perm> {
        if images.len() > 256 {
            return None;
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm { images })
    }

    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).map(|i| i as u8).collect() }
    }

    /// Builds a permutation on `n` points from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Perm> {
        let mut images: Vec<u8> = (0..n).map(|i| i as u8).collect();
        for cyc in cycles {
            for (k, &from) in cyc.iter().enumerate() {
                let to = cyc[(k + 1) % cyc.len()];
                if from >= n || to >= n {
                    return None;
                }
                images[from] = to as u8;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub(crate) fn from_raw(images: &[u8]) -> Perm {
        Perm { images: images.to_vec() }
    }

    /// Disjoint cycle decomposition, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            let parts: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// An `n x n` matrix over the integers modulo a prime `p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub n: usize,
    pub p: u8,
    pub entries: Vec<u8>,
}

impl Matrix {
    /// Reduces `rows` modulo `p`. `None` if the rows are ragged or not square.
    pub fn from_rows(p: u8, rows: &[Vec<i64>]) -> Option<Matrix> {
        let n = rows.len();
        if n == 0 || p < 2 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(p as i64) as u8)
            .collect();
        Some(Matrix { n, p, entries })
    }

    pub fn identity(n: usize, p: u8) -> Matrix {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1 % p;
        }
        Matrix { n, p, entries }
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.n + col]
    }

    /// Determinant modulo `p` by Gaussian elimination.
    pub fn det(&self) -> u64 {
        let p = self.p as u64;
        let n = self.n;
        let mut m: Vec<u64> = self.entries.iter().map(|&x| x as u64).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for c in 0..n {
                    m.swap(pivot * n + c, col * n + c);
                }
                det = crate::arith::neg_mod(det, p);
            }
            let pv = m[col * n + col];
            det = det * pv % p;
            let inv = crate::arith::inv_mod(pv, p);
            for r in col + 1..n {
                let factor = m[r * n + col] * inv % p;
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let sub = factor * m[col * n + c] % p;
                    m[r * n + c] = (m[r * n + c] + p - sub) % p;
                }
            }
        }
        det
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.n {
            if r > 0 {
                write!(f, ",")?;
            }
            let row: Vec<String> = (0..self.n).map(|c| self.get(r, c).to_string()).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        write!(f, "]")
    }
}

/// A pair `(x, X)` of a row vector in `Z_p^2` and a 2x2 matrix, multiplied as
/// `(x, X)(y, Y) = (x + y X^-1, XY)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffinePair {
    pub p: u8,
    pub vec: [u8; 2],
    pub mat: [u8; 4],
}

impl fmt::Display for AffinePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({},{}),[[{},{}],[{},{}]])",
            self.vec[0], self.vec[1], self.mat[0], self.mat[1], self.mat[2], self.mat[3]
        )
    }
}

/// The tagged element value. Every variant has a canonical byte encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Perm(Perm),
    Matrix(Matrix),
    Affine(AffinePair),
    /// `(a_1, .., a_n) top`, with every `a_i` drawn from one base group.
    Wreath { base: Vec<GroupElement>, top: Perm },
    /// A representative pair `(h, k)` of a coset of the identified central subgroup.
    CentralCoset { left: Box<GroupElement>, right: Box<GroupElement> },
}

impl GroupElement {
    /// Appends the encoding to `out`. Central cosets are encoded as given; the
    /// owning group canonicalises them on lookup.
    pub fn encode_into(&self, out: &mut Vec<u8>) {
        match self {
            GroupElement::Perm(p) => out.extend_from_slice(p.images()),
            GroupElement::Matrix(m) => out.extend_from_slice(&m.entries),
            GroupElement::Affine(a) => {
                out.extend_from_slice(&a.vec);
                out.extend_from_slice(&a.mat);
            }
            GroupElement::Wreath { base, top } => {
                for b in base {
                    b.encode_into(out);
                }
                out.extend_from_slice(top.images());
            }
            GroupElement::CentralCoset { left, right } => {
                left.encode_into(out);
                right.encode_into(out);
            }
        }
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.encode_into(&mut out);
        out
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            GroupElement::Perm(_) => "perm",
            GroupElement::Matrix(_) => "matrix",
            GroupElement::Affine(_) => "affine",
            GroupElement::Wreath { .. } => "wreath",
            GroupElement::CentralCoset { .. } => "central",
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Matrix(m) => write!(f, "{m}"),
            GroupElement::Affine(a) => write!(f, "{a}"),
            GroupElement::Wreath { base, top } => {
                let parts: Vec<String> = base.iter().map(|b| b.to_string()).collect();
                write!(f, "<{}>{}", parts.join("; "), top)
            }
            GroupElement::CentralCoset { left, right } => write!(f, "<{left} * {right}>"),
        }
    }
}
