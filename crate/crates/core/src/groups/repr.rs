//! Representations: how encodings of one family multiply, invert and decode.

use super::element::{AffinePair, GroupElement, Matrix, Perm};
use crate::arith::{inv_mod, neg_mod};

/// Describes the concrete representation shared by all elements of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Repr {
    /// Permutations on `n` points, composed left to right: `i^(ab) = (i^a)^b`.
    Perm { n: usize },
    /// Invertible `n x n` matrices modulo the prime `p`, usual matrix product.
    Matrix { n: usize, p: u8 },
    /// Pairs `(x, X)` with `(x, X)(y, Y) = (x + y X^-1, XY)`, vectors as rows.
    Affine { p: u8 },
    /// `A wr S_n`: `(a, s)(c, t) = (d, st)` with `d_i = a_i c_{i^s}`.
    Wreath { base: Box<Repr>, n: usize },
    /// `(H x K) / N` where `kernel` lists the encodings of `N`'s members.
    Central { left: Box<Repr>, right: Box<Repr>, kernel: Vec<Vec<u8>> },
}

impl Repr {
    pub fn width(&self) -> usize {
        match self {
            Repr::Perm { n } => *n,
            Repr::Matrix { n, .. } => n * n,
            Repr::Affine { .. } => 6,
            Repr::Wreath { base, n } => base.width() * n + n,
            Repr::Central { left, right, .. } => left.width() + right.width(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Repr::Perm { .. } => "perm",
            Repr::Matrix { .. } => "matrix",
            Repr::Affine { .. } => "affine",
            Repr::Wreath { .. } => "wreath",
            Repr::Central { .. } => "central",
        }
    }

    pub fn identity(&self) -> Vec<u8> {
        match self {
            Repr::Perm { n } => (0..*n).map(|i| i as u8).collect(),
            Repr::Matrix { n, p } => Matrix::identity(*n, *p).entries,
            Repr::Affine { .. } => vec![0, 0, 1, 0, 0, 1],
            Repr::Wreath { base, n } => {
                let mut out = Vec::with_capacity(self.width());
                for _ in 0..*n {
                    out.extend(base.identity());
                }
                out.extend((0..*n).map(|i| i as u8));
                out
            }
            Repr::Central { left, right, .. } => {
                let mut out = left.identity();
                out.extend(right.identity());
                out
            }
        }
    }

    /// Writes the encoding of `a * b` into `out`.
    pub fn mul_into(&self, a: &[u8], b: &[u8], out: &mut [u8]) {
        match self {
            Repr::Perm { .. } => perm_mul(a, b, out),
            Repr::Matrix { n, p } => mat_mul(*n, *p as u32, a, b, out),
            Repr::Affine { p } => affine_mul(*p as u32, a, b, out),
            Repr::Wreath { base, n } => {
                let w = base.width();
                let (ta, tb) = (&a[w * n..], &b[w * n..]);
                for i in 0..*n {
                    let j = ta[i] as usize;
                    base.mul_into(
                        &a[i * w..(i + 1) * w],
                        &b[j * w..(j + 1) * w],
                        &mut out[i * w..(i + 1) * w],
                    );
                }
                perm_mul(ta, tb, &mut out[w * n..]);
            }
            Repr::Central { left, right, .. } => {
                let wl = left.width();
                left.mul_into(&a[..wl], &b[..wl], &mut out[..wl]);
                right.mul_into(&a[wl..], &b[wl..], &mut out[wl..]);
                self.canonicalize(out);
            }
        }
    }

    pub fn mul(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut out = vec![0; self.width()];
        self.mul_into(a, b, &mut out);
        out
    }

    pub fn inverse(&self, a: &[u8]) -> Vec<u8> {
        match self {
            Repr::Perm { .. } => perm_inv(a),
            Repr::Matrix { n, p } => mat_inv(*n, *p as u64, a),
            Repr::Affine { p } => {
                let p32 = *p as u32;
                let xinv = mat2_inv(p32, &a[2..6]);
                // (x, X)^-1 = (-x X, X^-1)
                let v = row_times_mat2(p32, &a[0..2], &a[2..6]);
                let mut out = vec![0u8; 6];
                out[0] = neg_mod(v[0] as u64, p32 as u64) as u8;
                out[1] = neg_mod(v[1] as u64, p32 as u64) as u8;
                out[2..6].copy_from_slice(&xinv);
                out
            }
            Repr::Wreath { base, n } => {
                let w = base.width();
                let top = &a[w * n..];
                let mut out = vec![0u8; self.width()];
                // c_{i^s} = a_i^-1
                for i in 0..*n {
                    let j = top[i] as usize;
                    let inv = base.inverse(&a[i * w..(i + 1) * w]);
                    out[j * w..(j + 1) * w].copy_from_slice(&inv);
                }
                out[w * n..].copy_from_slice(&perm_inv(top));
                out
            }
            Repr::Central { left, right, .. } => {
                let wl = left.width();
                let mut out = left.inverse(&a[..wl]);
                out.extend(right.inverse(&a[wl..]));
                self.canonicalize(&mut out);
                out
            }
        }
    }

    /// Replaces a central-product encoding by the least member of its coset.
    /// A no-op for every other representation, including nested ones.
    pub fn canonicalize(&self, enc: &mut [u8]) {
        if let Repr::Central { left, right, kernel } = self {
            if kernel.len() <= 1 {
                return;
            }
            let wl = left.width();
            let original = enc.to_vec();
            let mut cand = vec![0u8; enc.len()];
            for z in kernel {
                left.mul_into(&original[..wl], &z[..wl], &mut cand[..wl]);
                right.mul_into(&original[wl..], &z[wl..], &mut cand[wl..]);
                if cand.as_slice() < &*enc {
                    enc.copy_from_slice(&cand);
                }
            }
        }
    }

    /// True when `a` and `b` commute, computed on the representation.
    pub fn commutes(&self, a: &[u8], b: &[u8]) -> bool {
        let w = self.width();
        if w <= 64 {
            let mut x = [0u8; 64];
            let mut y = [0u8; 64];
            self.mul_into(a, b, &mut x[..w]);
            self.mul_into(b, a, &mut y[..w]);
            x[..w] == y[..w]
        } else {
            self.mul(a, b) == self.mul(b, a)
        }
    }

    pub fn decode(&self, enc: &[u8]) -> GroupElement {
        match self {
            Repr::Perm { .. } => GroupElement::Perm(Perm::from_raw(enc)),
            Repr::Matrix { n, p } => {
                GroupElement::Matrix(Matrix { n: *n, p: *p, entries: enc.to_vec() })
            }
            Repr::Affine { p } => GroupElement::Affine(AffinePair {
                p: *p,
                vec: [enc[0], enc[1]],
                mat: [enc[2], enc[3], enc[4], enc[5]],
            }),
            Repr::Wreath { base, n } => {
                let w = base.width();
                GroupElement::Wreath {
                    base: (0..*n).map(|i| base.decode(&enc[i * w..(i + 1) * w])).collect(),
                    top: Perm::from_raw(&enc[w * n..]),
                }
            }
            Repr::Central { left, right, .. } => {
                let wl = left.width();
                GroupElement::CentralCoset {
                    left: Box::new(left.decode(&enc[..wl])),
                    right: Box::new(right.decode(&enc[wl..])),
                }
            }
        }
    }

    /// Checks that `el` is a well-formed element of this representation.
    pub fn accepts(&self, el: &GroupElement) -> bool {
        match (self, el) {
            (Repr::Perm { n }, GroupElement::Perm(p)) => p.degree() == *n,
            (Repr::Matrix { n, p }, GroupElement::Matrix(m)) => {
                m.n == *n
                    && m.p == *p
                    && m.entries.len() == n * n
                    && m.entries.iter().all(|&x| x < *p)
                    && m.det() != 0
            }
            (Repr::Affine { p }, GroupElement::Affine(a)) => {
                a.p == *p
                    && a.vec.iter().chain(a.mat.iter()).all(|&x| x < *p)
                    && mat2_det(*p as u32, &a.mat) != 0
            }
            (Repr::Wreath { base, n }, GroupElement::Wreath { base: b, top }) => {
                b.len() == *n && top.degree() == *n && b.iter().all(|x| base.accepts(x))
            }
            (Repr::Central { left, right, .. }, GroupElement::CentralCoset { left: l, right: r }) => {
                left.accepts(l) && right.accepts(r)
            }
            _ => false,
        }
    }

    /// Infers the representation from a sample element. Central products
    /// cannot be inferred because the identified subgroup is not recorded in
    /// the element.
    pub fn infer(el: &GroupElement) -> Option<Repr> {
        Some(match el {
            GroupElement::Perm(p) => Repr::Perm { n: p.degree() },
            GroupElement::Matrix(m) => Repr::Matrix { n: m.n, p: m.p },
            GroupElement::Affine(a) => Repr::Affine { p: a.p },
            GroupElement::Wreath { base, top } => Repr::Wreath {
                base: Box::new(Repr::infer(base.first()?)?),
                n: top.degree(),
            },
            GroupElement::CentralCoset { .. } => return None,
        })
    }
}

fn perm_mul(a: &[u8], b: &[u8], out: &mut [u8]) {
    for (o, &x) in out.iter_mut().zip(a) {
        *o = b[x as usize];
    }
}

fn perm_inv(a: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

fn mat_mul(n: usize, p: u32, a: &[u8], b: &[u8], out: &mut [u8]) {
    for r in 0..n {
        for c in 0..n {
            let mut acc = 0u32;
            for k in 0..n {
                acc += a[r * n + k] as u32 * b[k * n + c] as u32;
            }
            out[r * n + c] = (acc % p) as u8;
        }
    }
}

fn mat_inv(n: usize, p: u64, a: &[u8]) -> Vec<u8> {
    // Gauss-Jordan on [A | I]
    let w = 2 * n;
    let mut m = vec![0u64; n * w];
    for r in 0..n {
        for c in 0..n {
            m[r * w + c] = a[r * n + c] as u64;
        }
        m[r * w + n + r] = 1;
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| m[r * w + col] != 0)
            .expect("matrix is invertible");
        if pivot != col {
            for c in 0..w {
                m.swap(pivot * w + c, col * w + c);
            }
        }
        let inv = inv_mod(m[col * w + col], p);
        for c in 0..w {
            m[col * w + c] = m[col * w + c] * inv % p;
        }
        for r in 0..n {
            if r == col || m[r * w + col] == 0 {
                continue;
            }
            let f = m[r * w + col];
            for c in 0..w {
                let sub = f * m[col * w + c] % p;
                m[r * w + c] = (m[r * w + c] + p - sub) % p;
            }
        }
    }
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        out.extend(m[r * w + n..(r + 1) * w].iter().map(|&x| x as u8));
    }
    out
}

fn mat2_det(p: u32, m: &[u8]) -> u32 {
    let ad = m[0] as u32 * m[3] as u32 % p;
    let bc = m[1] as u32 * m[2] as u32 % p;
    (ad + p - bc) % p
}

fn mat2_inv(p: u32, m: &[u8]) -> [u8; 4] {
    let d = inv_mod(mat2_det(p, m) as u64, p as u64) as u32;
    let neg = |x: u8| (p - x as u32) % p;
    [
        (m[3] as u32 * d % p) as u8,
        (neg(m[1]) * d % p) as u8,
        (neg(m[2]) * d % p) as u8,
        (m[0] as u32 * d % p) as u8,
    ]
}

fn row_times_mat2(p: u32, v: &[u8], m: &[u8]) -> [u8; 2] {
    let (v0, v1) = (v[0] as u32, v[1] as u32);
    [
        ((v0 * m[0] as u32 + v1 * m[2] as u32) % p) as u8,
        ((v0 * m[1] as u32 + v1 * m[3] as u32) % p) as u8,
    ]
}

fn affine_mul(p: u32, a: &[u8], b: &[u8], out: &mut [u8]) {
    // (x, X)(y, Y) = (x + y X^-1, XY)
    let xinv = mat2_inv(p, &a[2..6]);
    let yx = row_times_mat2(p, &b[0..2], &xinv);
    out[0] = ((a[0] as u32 + yx[0] as u32) % p) as u8;
    out[1] = ((a[1] as u32 + yx[1] as u32) % p) as u8;
    mat_mul(2, p, &a[2..6], &b[2..6], &mut out[2..6]);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_composition_is_left_to_right() {
        let r = Repr::Perm { n: 3 };
        // a = (0 1), b = (1 2); 0 -a-> 1 -b-> 2
        let a = [1, 0, 2];
        let b = [0, 2, 1];
        assert_eq!(r.mul(&a, &b), vec![2, 0, 1]);
    }

    #[test]
    fn three_cycle_inverse() {
        let r = Repr::Perm { n: 3 };
        let c = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let inv = r.inverse(c.images());
        assert_eq!(Perm::new(inv).unwrap().to_string(), "(0 2 1)");
    }

    #[test]
    fn matrix_inverse_round_trip() {
        let r = Repr::Matrix { n: 3, p: 7 };
        let a = [3, 6, 2, 2, 0, 1, 0, 0, 1];
        let inv = r.inverse(&a);
        assert_eq!(r.mul(&a, &inv), r.identity());
        assert_eq!(r.mul(&inv, &a), r.identity());
    }

    #[test]
    fn affine_product_rule() {
        let r = Repr::Affine { p: 7 };
        let t = [0, 1, 1, 0, 0, 1];
        assert_eq!(r.mul(&t, &t), vec![0, 2, 1, 0, 0, 1]);
        // ((1,1),-I) squares to the identity
        let a = [1, 1, 6, 0, 0, 6];
        assert_eq!(r.mul(&a, &a), r.identity());
        assert_eq!(r.inverse(&a), a.to_vec());
    }

    #[test]
    fn wreath_inverse() {
        let r = Repr::Wreath { base: Box::new(Repr::Perm { n: 3 }), n: 2 };
        let g = [1, 2, 0, 1, 0, 2, 1, 0];
        let inv = r.inverse(&g);
        assert_eq!(r.mul(&g, &inv), r.identity());
        assert_eq!(r.mul(&inv, &g), r.identity());
    }
}
