//! Group families: standard small groups, wreath products, central and
//! direct products, unitriangular matrix groups, extraspecial groups, the
//! affine family `Z_p^2 : SL(2,3)` and matrix groups from explicit generators.

use std::fmt;

use crate::arith::{is_prime, neg_mod};
use crate::error::{Error, Result};
use crate::groups::{AffinePair, ElementId, FiniteGroup, GroupElement, Matrix, Perm, Repr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardGroup {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Dihedral group of order `n` (not `2n`).
    Dihedral(usize),
    Quaternion8,
    Sl23,
}

/// How the central subgroups of the two factors of a central product are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phi {
    /// Send the least generator of `Z(H)` to the least generator of `Z(K)`;
    /// both centers must be cyclic of the same order.
    Center,
    /// Identify nothing: the direct product.
    Trivial,
    /// Send element `h` of `H` to element `k` of `K` (ids in the enumerated factors).
    Ids(ElementId, ElementId),
}

impl fmt::Display for Phi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phi::Center => write!(f, "center"),
            Phi::Trivial => write!(f, "trivial"),
            Phi::Ids(h, k) => write!(f, "ids({h}, {k})"),
        }
    }
}

/// Expression describing how to build a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Standard(StandardGroup),
    Wreath(Box<GroupSpec>, usize),
    CentralProduct(Box<GroupSpec>, Box<GroupSpec>, Phi),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    Ult(usize, u64),
    Extraspecial(u64, usize),
    ConstructionW(u64),
    MatGroup { n: usize, p: u64, gens: Vec<Vec<Vec<i64>>> },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Standard(s) => match s {
                StandardGroup::Symmetric(n) => write!(f, "sym({n})"),
                StandardGroup::Alternating(n) => write!(f, "alt({n})"),
                StandardGroup::Cyclic(n) => write!(f, "cyc({n})"),
                StandardGroup::Dihedral(n) => write!(f, "dih({n})"),
                StandardGroup::Quaternion8 => write!(f, "q8()"),
                StandardGroup::Sl23 => write!(f, "sl23()"),
            },
            GroupSpec::Wreath(b, n) => write!(f, "wr({b}, {n})"),
            GroupSpec::CentralProduct(h, k, phi) => write!(f, "cprod({h}, {k}, phi={phi})"),
            GroupSpec::DirectProduct(h, k) => write!(f, "dprod({h}, {k})"),
            GroupSpec::Ult(n, p) => write!(f, "ult({n}, {p})"),
            GroupSpec::Extraspecial(p, r) => write!(f, "extra({p}, {r})"),
            GroupSpec::ConstructionW(p) => write!(f, "W({p})"),
            GroupSpec::MatGroup { n, p, gens } => {
                write!(f, "matgrp({n}, {p}")?;
                for g in gens {
                    let rows: Vec<String> = g
                        .iter()
                        .map(|r| {
                            let xs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                            format!("[{}]", xs.join(","))
                        })
                        .collect();
                    write!(f, ", [{}]", rows.join(","))?;
                }
                write!(f, ")")
            }
        }
    }
}

impl GroupSpec {
    /// Parameter checks that need no enumeration.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Standard(s) => check_standard(*s),
            GroupSpec::Wreath(b, n) => {
                if *n < 1 || *n > 8 {
                    return Err(Error::UnsupportedParams(format!("wreath degree {n} not in 1..=8")));
                }
                b.validate()
            }
            GroupSpec::CentralProduct(h, k, _) | GroupSpec::DirectProduct(h, k) => {
                h.validate()?;
                k.validate()
            }
            GroupSpec::Ult(n, p) => check_ult(*n, *p),
            GroupSpec::Extraspecial(p, r) => check_extraspecial(*p, *r),
            GroupSpec::ConstructionW(p) => check_w_prime(*p),
            GroupSpec::MatGroup { n, p, gens } => check_matgroup(*n, *p, gens),
        }
    }

    /// Builds the group, refusing to enumerate more than `max_order` elements.
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        self.validate()?;
        match self {
            GroupSpec::Standard(s) => standard_group(*s, max_order),
            GroupSpec::Wreath(b, n) => wreath(&b.build(max_order)?, *n, max_order),
            GroupSpec::CentralProduct(h, k, phi) => {
                central_product(&h.build(max_order)?, &k.build(max_order)?, *phi, max_order)
            }
            GroupSpec::DirectProduct(h, k) => {
                direct_product(&h.build(max_order)?, &k.build(max_order)?, max_order)
            }
            GroupSpec::Ult(n, p) => ult(*n, *p, max_order),
            GroupSpec::Extraspecial(p, r) => extraspecial(*p, *r, max_order),
            GroupSpec::ConstructionW(p) => construction_w(*p, max_order).map(|(g, _)| g),
            GroupSpec::MatGroup { n, p, gens } => {
                matrix_group_from_generators(*n, *p, gens, max_order)
            }
        }
    }
}

fn check_standard(s: StandardGroup) -> Result<()> {
    let bad = |msg: String| Err(Error::UnsupportedParams(msg));
    match s {
        StandardGroup::Symmetric(n) | StandardGroup::Alternating(n) if !(1..=8).contains(&n) => {
            bad(format!("degree {n} not in 1..=8"))
        }
        StandardGroup::Cyclic(n) if !(1..=256).contains(&n) => {
            bad(format!("cyclic order {n} not in 1..=256"))
        }
        StandardGroup::Dihedral(n) if n < 4 || n % 2 == 1 || n > 512 => {
            bad(format!("dihedral order {n} must be even and in 4..=512"))
        }
        _ => Ok(()),
    }
}

fn check_prime_modulus(p: u64) -> Result<()> {
    if !is_prime(p) || p > 251 {
        return Err(Error::NotValidPrime(p));
    }
    Ok(())
}

fn check_ult(n: usize, p: u64) -> Result<()> {
    check_prime_modulus(p)?;
    if !(2..=16).contains(&n) {
        return Err(Error::UnsupportedParams(format!("ult size {n} not in 2..=16")));
    }
    Ok(())
}

fn check_extraspecial(p: u64, rank: usize) -> Result<()> {
    check_prime_modulus(p)?;
    if !(1..=2).contains(&rank) {
        return Err(Error::UnsupportedParams(format!("extraspecial rank {rank} not in {{1, 2}}")));
    }
    Ok(())
}

fn check_w_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p % 3 != 1 || p > 251 {
        return Err(Error::NotValidPrime(p));
    }
    Ok(())
}

fn check_matgroup(n: usize, p: u64, gens: &[Vec<Vec<i64>>]) -> Result<()> {
    check_prime_modulus(p)?;
    if n == 0 || n > 8 {
        return Err(Error::UnsupportedParams(format!("matrix size {n} not in 1..=8")));
    }
    for (i, g) in gens.iter().enumerate() {
        if g.len() != n || g.iter().any(|r| r.len() != n) {
            return Err(Error::UnsupportedParams(format!("generator {i} is not {n}x{n}")));
        }
    }
    Ok(())
}

/// Guards `|G| <= cap` before enumerating, using exact integer arithmetic.
fn check_cap(expected: Option<u128>, cap: usize) -> Result<()> {
    match expected {
        Some(o) if o <= cap as u128 => Ok(()),
        _ => Err(Error::OrderCapExceeded(cap)),
    }
}

fn perm_el(n: usize, cycles: &[&[usize]]) -> GroupElement {
    GroupElement::Perm(Perm::from_cycles(n, cycles).expect("valid cycles"))
}

fn mat_el(p: u8, rows: &[Vec<i64>]) -> GroupElement {
    GroupElement::Matrix(Matrix::from_rows(p, rows).expect("square matrix"))
}

pub fn standard_group(which: StandardGroup, max_order: usize) -> Result<FiniteGroup> {
    check_standard(which)?;
    let gens: Vec<GroupElement> = match which {
        StandardGroup::Symmetric(n) => {
            let full: Vec<usize> = (0..n).collect();
            if n == 1 {
                vec![perm_el(1, &[])]
            } else {
                vec![perm_el(n, &[&[0, 1]]), perm_el(n, &[&full])]
            }
        }
        StandardGroup::Alternating(n) => match n {
            1 | 2 => vec![perm_el(n, &[])],
            3 => vec![perm_el(3, &[&[0, 1, 2]])],
            _ => {
                let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
                vec![perm_el(n, &[&[0, 1, 2]]), perm_el(n, &[&long])]
            }
        },
        StandardGroup::Cyclic(n) => {
            let full: Vec<usize> = (0..n).collect();
            vec![perm_el(n, &[&full])]
        }
        StandardGroup::Dihedral(n) => {
            let m = n / 2;
            if m == 2 {
                vec![perm_el(4, &[&[0, 1], &[2, 3]]), perm_el(4, &[&[0, 2], &[1, 3]])]
            } else {
                let rot: Vec<usize> = (0..m).collect();
                let refl: Vec<u8> = (0..m).map(|i| ((m - i) % m) as u8).collect();
                vec![perm_el(m, &[&rot]), GroupElement::Perm(Perm::new(refl).unwrap())]
            }
        }
        StandardGroup::Quaternion8 => vec![
            mat_el(3, &[vec![0, 1], vec![-1, 0]]),
            mat_el(3, &[vec![1, 1], vec![1, -1]]),
        ],
        StandardGroup::Sl23 => vec![
            mat_el(3, &[vec![1, 1], vec![0, 1]]),
            mat_el(3, &[vec![1, 0], vec![1, 1]]),
        ],
    };
    crate::groups::enumerate_closure(&gens, max_order)
}

/// `A wr S_n` with the full symmetric group permuting coordinates.
pub fn wreath(base: &FiniteGroup, n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 8 {
        return Err(Error::UnsupportedParams(format!("wreath degree {n} not in 1..=8")));
    }
    let fact: u128 = (1..=n as u128).product();
    check_cap(
        (base.order() as u128).checked_pow(n as u32).and_then(|x| x.checked_mul(fact)),
        max_order,
    )?;
    let repr = Repr::Wreath { base: Box::new(base.repr().clone()), n };
    let w = base.repr().width();
    let ident_base = base.encoding(base.identity()).to_vec();
    let ident_top: Vec<u8> = (0..n as u8).collect();
    let mut gens = Vec::new();
    for &a in base.generators() {
        let mut e = base.encoding(a).to_vec();
        for _ in 1..n {
            e.extend_from_slice(&ident_base);
        }
        e.extend_from_slice(&ident_top);
        gens.push(e);
    }
    let mut tops: Vec<Vec<u8>> = Vec::new();
    if n >= 2 {
        let mut swap = ident_top.clone();
        swap.swap(0, 1);
        tops.push(swap);
        let cycle: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        if !tops.contains(&cycle) {
            tops.push(cycle);
        }
    }
    for t in tops {
        let mut e = Vec::with_capacity(w * n + n);
        for _ in 0..n {
            e.extend_from_slice(&ident_base);
        }
        e.extend_from_slice(&t);
        gens.push(e);
    }
    FiniteGroup::generate_encoded(repr, &gens, max_order)
}

/// External central product `(H x K) / {(z^i, phi(z)^-i)}`.
pub fn central_product(
    h: &FiniteGroup,
    k: &FiniteGroup,
    phi: Phi,
    max_order: usize,
) -> Result<FiniteGroup> {
    let (zh, zk) = match phi {
        Phi::Trivial => (h.identity(), k.identity()),
        Phi::Center => (cyclic_center_generator(h, "left")?, cyclic_center_generator(k, "right")?),
        Phi::Ids(a, b) => {
            if a >= h.order() || b >= k.order() {
                return Err(Error::InvalidPhi(format!("ids ({a}, {b}) out of range")));
            }
            (a, b)
        }
    };
    if !h.is_central(zh) || !k.is_central(zk) {
        return Err(Error::InvalidPhi("identified elements must be central".into()));
    }
    let m = h.element_order(zh);
    if m != k.element_order(zk) {
        return Err(Error::InvalidPhi(format!(
            "orders differ: {m} in the left factor, {} in the right",
            k.element_order(zk)
        )));
    }
    check_cap(
        Some(h.order() as u128 * k.order() as u128 / m as u128),
        max_order,
    )?;
    let zk_inv = k.invert(zk);
    let kernel: Vec<Vec<u8>> = (0..m)
        .map(|i| {
            let mut e = h.encoding(h.power(zh, i)).to_vec();
            e.extend_from_slice(k.encoding(k.power(zk_inv, i)));
            e
        })
        .collect();
    let repr = Repr::Central {
        left: Box::new(h.repr().clone()),
        right: Box::new(k.repr().clone()),
        kernel,
    };
    let eh = h.encoding(h.identity());
    let ek = k.encoding(k.identity());
    let mut gens = Vec::new();
    for &a in h.generators() {
        let mut e = h.encoding(a).to_vec();
        e.extend_from_slice(ek);
        gens.push(e);
    }
    for &b in k.generators() {
        let mut e = eh.to_vec();
        e.extend_from_slice(k.encoding(b));
        gens.push(e);
    }
    for g in &mut gens {
        repr.canonicalize(g);
    }
    FiniteGroup::generate_encoded(repr, &gens, max_order)
}

pub fn direct_product(h: &FiniteGroup, k: &FiniteGroup, max_order: usize) -> Result<FiniteGroup> {
    central_product(h, k, Phi::Trivial, max_order)
}

fn cyclic_center_generator(g: &FiniteGroup, side: &str) -> Result<ElementId> {
    let z = g.center();
    let mut best: Option<ElementId> = None;
    for &c in z {
        if g.element_order(c) as usize == z.len()
            && best.is_none_or(|b| g.encoding(c) < g.encoding(b))
        {
            best = Some(c);
        }
    }
    best.ok_or_else(|| Error::InvalidPhi(format!("center of the {side} factor is not cyclic")))
}

/// Lower unitriangular `n x n` matrices over `Z_p`.
pub fn ult(n: usize, p: u64, max_order: usize) -> Result<FiniteGroup> {
    check_ult(n, p)?;
    check_cap((p as u128).checked_pow((n * (n - 1) / 2) as u32), max_order)?;
    let gens: Vec<GroupElement> = (0..n - 1)
        .map(|i| {
            let mut m = Matrix::identity(n, p as u8);
            m.entries[(i + 1) * n + i] = 1;
            GroupElement::Matrix(m)
        })
        .collect();
    crate::groups::enumerate_closure(&gens, max_order)
}

/// Extraspecial group of order `p^(2 rank + 1)`: `ULT(3,p)` (or `Q8` when
/// `p = 2`) for rank 1, and the central product of two of those for rank 2.
pub fn extraspecial(p: u64, rank: usize, max_order: usize) -> Result<FiniteGroup> {
    check_extraspecial(p, rank)?;
    check_cap((p as u128).checked_pow(2 * rank as u32 + 1), max_order)?;
    let small = if p == 2 {
        standard_group(StandardGroup::Quaternion8, max_order)?
    } else {
        ult(3, p, max_order)?
    };
    if rank == 1 {
        return Ok(small);
    }
    central_product(&small, &small, Phi::Center, max_order)
}

/// Parameters of the affine family `W_p = Z_p^2 : S` with `S = <J, K, L, Z>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionWParams {
    pub p: u64,
    pub alpha: u64,
    pub beta: u64,
    pub j: [u8; 4],
    pub k: [u8; 4],
    pub l: [u8; 4],
    pub z: [u8; 4],
}

impl ConstructionWParams {
    pub fn new(p: u64) -> Result<Self> {
        check_w_prime(p)?;
        let alpha = (2..p).find(|a| a * a % p * a % p == 1).expect("p = 1 mod 3");
        let beta = (alpha + 1) % p;
        let neg = |x: u64| neg_mod(x, p);
        let m = |a: u64, b: u64, c: u64, d: u64| [a as u8, b as u8, c as u8, d as u8];
        Ok(ConstructionWParams {
            p,
            alpha,
            beta,
            j: m(0, 1, neg(1), 0),
            k: m(alpha, beta, beta, neg(alpha)),
            l: m(beta, neg(alpha), neg(alpha), neg(beta)),
            z: m(neg(beta), alpha, 0, 1),
        })
    }

    pub fn element(&self, vec: [u64; 2], mat: [u8; 4]) -> GroupElement {
        GroupElement::Affine(AffinePair {
            p: self.p as u8,
            vec: [(vec[0] % self.p) as u8, (vec[1] % self.p) as u8],
            mat,
        })
    }

    pub fn identity_matrix(&self) -> [u8; 4] {
        [1, 0, 0, 1]
    }

    pub fn minus_identity(&self) -> [u8; 4] {
        let m = (self.p - 1) as u8;
        [m, 0, 0, m]
    }
}

/// `W_p = Z_p^2 : SL(2,3)` of order `24 p^2`, for primes `p = 1 mod 3`.
pub fn construction_w(p: u64, max_order: usize) -> Result<(FiniteGroup, ConstructionWParams)> {
    let params = ConstructionWParams::new(p)?;
    check_cap(Some(24 * (p as u128) * (p as u128)), max_order)?;
    let i = params.identity_matrix();
    let gens = vec![
        params.element([1, 0], i),
        params.element([0, 1], i),
        params.element([0, 0], params.j),
        params.element([0, 0], params.k),
        params.element([0, 0], params.l),
        params.element([0, 0], params.z),
    ];
    let g = FiniteGroup::generate(Repr::Affine { p: p as u8 }, &gens, max_order)?;
    Ok((g, params))
}

/// Closure of explicit matrix generators over `Z_p`.
pub fn matrix_group_from_generators(
    n: usize,
    p: u64,
    gens: &[Vec<Vec<i64>>],
    max_order: usize,
) -> Result<FiniteGroup> {
    check_matgroup(n, p, gens)?;
    let mut els = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let m = Matrix::from_rows(p as u8, g)
            .ok_or_else(|| Error::UnsupportedParams(format!("generator {i} is malformed")))?;
        if m.det() == 0 {
            return Err(Error::SingularGenerator(i));
        }
        els.push(GroupElement::Matrix(m));
    }
    if els.is_empty() {
        els.push(GroupElement::Matrix(Matrix::identity(n, p as u8)));
    }
    FiniteGroup::generate(Repr::Matrix { n, p: p as u8 }, &els, max_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_MAX_ORDER as CAP;

    #[test]
    fn standard_orders() {
        use StandardGroup::*;
        for (s, o) in [
            (Symmetric(1), 1),
            (Symmetric(3), 6),
            (Symmetric(4), 24),
            (Alternating(4), 12),
            (Alternating(5), 60),
            (Alternating(6), 360),
            (Cyclic(12), 12),
            (Dihedral(4), 4),
            (Dihedral(10), 10),
            (Dihedral(18), 18),
            (Quaternion8, 8),
            (Sl23, 24),
        ] {
            assert_eq!(standard_group(s, CAP).unwrap().order(), o, "{s:?}");
        }
    }

    #[test]
    fn unsupported_standard_params() {
        assert!(matches!(
            standard_group(StandardGroup::Dihedral(9), CAP),
            Err(Error::UnsupportedParams(_))
        ));
        assert!(matches!(
            standard_group(StandardGroup::Symmetric(9), CAP),
            Err(Error::UnsupportedParams(_))
        ));
    }

    #[test]
    fn sl23_has_one_involution() {
        let g = standard_group(StandardGroup::Sl23, CAP).unwrap();
        assert_eq!(g.elements_of_order(2).len(), 1);
    }

    #[test]
    fn dihedral_ten_has_trivial_center() {
        let g = standard_group(StandardGroup::Dihedral(10), CAP).unwrap();
        // brute force over all elements, not just generators
        let center: Vec<_> = g.ids().filter(|&z| g.ids().all(|x| g.commutes(z, x))).collect();
        assert_eq!(center, vec![0]);
    }

    #[test]
    fn wreath_orders() {
        let s3 = standard_group(StandardGroup::Symmetric(3), CAP).unwrap();
        assert_eq!(wreath(&s3, 2, CAP).unwrap().order(), 72);
        let d10 = standard_group(StandardGroup::Dihedral(10), CAP).unwrap();
        assert_eq!(wreath(&d10, 3, CAP).unwrap().order(), 6000);
        assert_eq!(wreath(&d10, 3, 5000).unwrap_err(), Error::OrderCapExceeded(5000));
    }

    #[test]
    fn central_product_of_quaternions() {
        let q = standard_group(StandardGroup::Quaternion8, CAP).unwrap();
        let g = central_product(&q, &q, Phi::Center, CAP).unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(g.center().len(), 2);
        let d = direct_product(&q, &q, CAP).unwrap();
        assert_eq!(d.order(), 64);
    }

    #[test]
    fn invalid_phi() {
        let q = standard_group(StandardGroup::Quaternion8, CAP).unwrap();
        let c3 = standard_group(StandardGroup::Cyclic(3), CAP).unwrap();
        // order mismatch: -I has order 2, the generator of C3 order 3
        let minus = q.center()[1];
        assert!(matches!(
            central_product(&q, &c3, Phi::Ids(minus, 1), CAP),
            Err(Error::InvalidPhi(_))
        ));
        // a non-central element of Q8
        let s = q.ids().find(|&x| !q.is_central(x)).unwrap();
        assert!(matches!(
            central_product(&q, &q, Phi::Ids(s, minus), CAP),
            Err(Error::InvalidPhi(_))
        ));
        let s3 = standard_group(StandardGroup::Symmetric(3), CAP).unwrap();
        assert!(matches!(
            central_product(&s3, &q, Phi::Center, CAP),
            Err(Error::InvalidPhi(_))
        ));
    }

    #[test]
    fn ult_orders_and_centers() {
        for (n, p, o) in [(3, 5, 125), (4, 2, 64), (5, 2, 1024), (3, 3, 27)] {
            let g = ult(n, p, CAP).unwrap();
            assert_eq!(g.order(), o);
            assert_eq!(g.center().len() as u64, p);
            // center is I + a E_{n,1}
            for &z in g.center() {
                let GroupElement::Matrix(m) = g.element(z) else { panic!() };
                for r in 0..n {
                    for c in 0..n {
                        if r != c && !(r == n - 1 && c == 0) {
                            assert_eq!(m.get(r, c), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn construction_w_params() {
        let params = ConstructionWParams::new(7).unwrap();
        assert_eq!((params.alpha, params.beta), (2, 3));
        assert_eq!(construction_w(5, CAP).unwrap_err(), Error::NotValidPrime(5));
        assert_eq!(construction_w(25, CAP).unwrap_err(), Error::NotValidPrime(25));
        assert_eq!(construction_w(13, 1000).unwrap_err(), Error::OrderCapExceeded(1000));
    }

    #[test]
    fn matrix_generator_errors() {
        let sing = vec![vec![vec![1, 2], vec![2, 4]]];
        assert_eq!(
            matrix_group_from_generators(2, 5, &sing, CAP).unwrap_err(),
            Error::SingularGenerator(0)
        );
        assert_eq!(
            matrix_group_from_generators(2, 6, &sing, CAP).unwrap_err(),
            Error::NotValidPrime(6)
        );
        let ident = vec![vec![vec![1, 0], vec![0, 1]]];
        assert_eq!(matrix_group_from_generators(2, 3, &ident, CAP).unwrap().order(), 1);
    }

    #[test]
    fn canonical_display() {
        let s = GroupSpec::Wreath(Box::new(GroupSpec::Standard(StandardGroup::Dihedral(10))), 3);
        assert_eq!(s.to_string(), "wr(dih(10), 3)");
        let m = GroupSpec::MatGroup { n: 2, p: 3, gens: vec![vec![vec![1, 1], vec![0, 1]]] };
        assert_eq!(m.to_string(), "matgrp(2, 3, [[1,1],[0,1]])");
    }
}
