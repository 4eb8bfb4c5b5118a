//! Enumerated finite groups and their structural queries.
//!
//! A [`FiniteGroup`] is built once by closing a generating set under
//! multiplication. Elements receive dense ids in discovery order, identity
//! first. Products are always computed on the representation; ids are
//! recovered through an encoding index. Derived data (element orders, center,
//! conjugacy classes, derived subgroup) is computed on first request and
//! cached, so a finished group can be shared freely between threads.

mod element;
mod repr;

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

pub use element::{AffinePair, GroupElement, Matrix, Perm};
pub use repr::Repr;

use crate::arith::prime_divisors;
use crate::error::{Error, Result};

/// Dense index of an element inside its [`FiniteGroup`].
pub type ElementId = usize;

/// Enumeration cap used when the caller does not supply one.
pub const DEFAULT_MAX_ORDER: usize = 100_000;

pub struct FiniteGroup {
    repr: Repr,
    width: usize,
    data: Vec<u8>,
    index: HashMap<Box<[u8]>, u32>,
    generators: Vec<ElementId>,
    inverses: OnceLock<Vec<u32>>,
    orders: OnceLock<Vec<u32>>,
    center: OnceLock<Vec<ElementId>>,
    classes: OnceLock<Vec<Vec<ElementId>>>,
    derived: OnceLock<Vec<ElementId>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("repr", &self.repr.name())
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Closure of `gens` under multiplication, inferring the representation from
/// the first generator.
pub fn enumerate_closure(gens: &[GroupElement], max_order: usize) -> Result<FiniteGroup> {
    let first = gens
        .first()
        .ok_or_else(|| Error::IncompatibleGenerators("empty generating set".into()))?;
    let repr = Repr::infer(first).ok_or_else(|| {
        Error::IncompatibleGenerators("central cosets need an explicit representation".into())
    })?;
    FiniteGroup::generate(repr, gens, max_order)
}

impl FiniteGroup {
    /// Enumerates the subgroup generated by `gens` inside `repr`.
    pub fn generate(repr: Repr, gens: &[GroupElement], max_order: usize) -> Result<FiniteGroup> {
        let mut encoded = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if !repr.accepts(g) {
                return Err(Error::IncompatibleGenerators(format!(
                    "generator {i} ({}) does not belong to the {} representation",
                    g.variant_name(),
                    repr.name()
                )));
            }
            let mut e = g.encode();
            repr.canonicalize(&mut e);
            encoded.push(e);
        }
        Self::generate_encoded(repr, &encoded, max_order)
    }

    pub(crate) fn generate_encoded(
        repr: Repr,
        gens: &[Vec<u8>],
        max_order: usize,
    ) -> Result<FiniteGroup> {
        let width = repr.width();
        let mut data = repr.identity();
        let mut index: HashMap<Box<[u8]>, u32> = HashMap::new();
        index.insert(data.clone().into_boxed_slice(), 0);
        let mut buf = vec![0u8; width];
        let mut next = 0usize;
        while next < index.len() {
            for g in gens {
                repr.mul_into(&data[next * width..(next + 1) * width], g, &mut buf);
                if !index.contains_key(buf.as_slice()) {
                    if index.len() >= max_order {
                        return Err(Error::OrderCapExceeded(max_order));
                    }
                    index.insert(buf.clone().into_boxed_slice(), index.len() as u32);
                    data.extend_from_slice(&buf);
                }
            }
            next += 1;
        }
        let generators = gens.iter().map(|g| index[g.as_slice()] as ElementId).collect();
        Ok(FiniteGroup {
            repr,
            width,
            data,
            index,
            generators,
            inverses: OnceLock::new(),
            orders: OnceLock::new(),
            center: OnceLock::new(),
            classes: OnceLock::new(),
            derived: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.data.len() / self.width.max(1)
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn ids(&self) -> std::ops::Range<ElementId> {
        0..self.order()
    }

    pub fn encoding(&self, id: ElementId) -> &[u8] {
        assert!(id < self.order(), "element id {id} out of range");
        &self.data[id * self.width..(id + 1) * self.width]
    }

    pub fn element(&self, id: ElementId) -> GroupElement {
        self.repr.decode(self.encoding(id))
    }

    pub fn id_of_encoding(&self, enc: &[u8]) -> Option<ElementId> {
        if enc.len() != self.width {
            return None;
        }
        if matches!(self.repr, Repr::Central { .. }) {
            let mut e = enc.to_vec();
            self.repr.canonicalize(&mut e);
            return self.index.get(e.as_slice()).map(|&i| i as ElementId);
        }
        self.index.get(enc).map(|&i| i as ElementId)
    }

    pub fn id_of(&self, el: &GroupElement) -> Option<ElementId> {
        if !self.repr.accepts(el) {
            return None;
        }
        self.id_of_encoding(&el.encode())
    }

    fn lookup(&self, enc: &[u8]) -> ElementId {
        match self.index.get(enc) {
            Some(&i) => i as ElementId,
            None => panic!("product left the enumerated group (encoding {enc:?})"),
        }
    }

    pub fn multiply(&self, a: ElementId, b: ElementId) -> ElementId {
        let mut buf = vec![0u8; self.width];
        self.repr.mul_into(self.encoding(a), self.encoding(b), &mut buf);
        self.lookup(&buf)
    }

    pub fn invert(&self, a: ElementId) -> ElementId {
        if let Some(inv) = self.inverses.get() {
            return inv[a] as ElementId;
        }
        self.lookup(&self.repr.inverse(self.encoding(a)))
    }

    /// Inverse table for every element, built on first use.
    pub fn inverses(&self) -> &[u32] {
        self.inverses.get_or_init(|| {
            self.ids()
                .map(|a| self.lookup(&self.repr.inverse(self.encoding(a))) as u32)
                .collect()
        })
    }

    pub fn commutes(&self, a: ElementId, b: ElementId) -> bool {
        self.repr.commutes(self.encoding(a), self.encoding(b))
    }

    /// `a^x = x^-1 a x`.
    pub fn conjugate(&self, a: ElementId, x: ElementId) -> ElementId {
        let xi = self.invert(x);
        self.multiply(self.multiply(xi, a), x)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        let ai = self.invert(a);
        let bi = self.invert(b);
        self.multiply(self.multiply(ai, bi), self.multiply(a, b))
    }

    /// `a^k` by square-and-multiply on the representation.
    pub fn power(&self, a: ElementId, k: u64) -> ElementId {
        self.lookup(&self.power_encoding(self.encoding(a), k))
    }

    fn power_encoding(&self, a: &[u8], mut k: u64) -> Vec<u8> {
        let mut acc = self.repr.identity();
        let mut base = a.to_vec();
        let mut tmp = vec![0u8; self.width];
        while k > 0 {
            if k & 1 == 1 {
                self.repr.mul_into(&acc, &base, &mut tmp);
                std::mem::swap(&mut acc, &mut tmp);
            }
            k >>= 1;
            if k > 0 {
                self.repr.mul_into(&base, &base, &mut tmp);
                std::mem::swap(&mut base, &mut tmp);
            }
        }
        acc
    }

    fn compute_order(&self, a: ElementId, primes: &[u64]) -> u64 {
        let ident = self.repr.identity();
        let enc = self.encoding(a);
        let mut ord = self.order() as u64;
        for &q in primes {
            while ord.is_multiple_of(q) && self.power_encoding(enc, ord / q) == ident {
                ord /= q;
            }
        }
        ord
    }

    /// Smallest `k >= 1` with `a^k = e`.
    pub fn element_order(&self, a: ElementId) -> u64 {
        if let Some(orders) = self.orders.get() {
            return orders[a] as u64;
        }
        self.compute_order(a, &prime_divisors(self.order() as u64))
    }

    /// Orders of all elements, indexed by id.
    pub fn orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            let primes = prime_divisors(self.order() as u64);
            self.ids().map(|a| self.compute_order(a, &primes) as u32).collect()
        })
    }

    pub fn elements_of_order(&self, k: u64) -> Vec<ElementId> {
        let orders = self.orders();
        self.ids().filter(|&a| orders[a] as u64 == k).collect()
    }

    /// All elements commuting with `a`, in increasing id order.
    pub fn centralizer(&self, a: ElementId) -> Vec<ElementId> {
        let ea = self.encoding(a);
        self.ids()
            .filter(|&g| self.repr.commutes(ea, self.encoding(g)))
            .collect()
    }

    /// Elements commuting with every generator, in increasing id order.
    pub fn center(&self) -> &[ElementId] {
        self.center.get_or_init(|| {
            self.ids()
                .filter(|&z| self.generators.iter().all(|&g| self.commutes(z, g)))
                .collect()
        })
    }

    pub fn is_central(&self, a: ElementId) -> bool {
        self.center().binary_search(&a).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order()
    }

    /// Orbits of conjugation, each sorted, listed by least member.
    pub fn conjugacy_classes(&self) -> &[Vec<ElementId>] {
        self.classes.get_or_init(|| {
            let gens: Vec<(ElementId, ElementId)> = self
                .generators
                .iter()
                .map(|&g| (g, self.invert(g)))
                .collect();
            let mut class_of = vec![usize::MAX; self.order()];
            let mut classes = Vec::new();
            let mut queue = VecDeque::new();
            for start in self.ids() {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let c = classes.len();
                class_of[start] = c;
                let mut members = vec![start];
                queue.push_back(start);
                while let Some(x) = queue.pop_front() {
                    for &(g, gi) in &gens {
                        let y = self.multiply(self.multiply(gi, x), g);
                        if class_of[y] == usize::MAX {
                            class_of[y] = c;
                            members.push(y);
                            queue.push_back(y);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            classes
        })
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn subgroup_mask(&self, gens: &[ElementId]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        self.extend_subgroup(&mut mask, gens);
        mask
    }

    fn extend_subgroup(&self, mask: &mut [bool], gens: &[ElementId]) {
        let mut queue: VecDeque<ElementId> = VecDeque::new();
        if !mask[0] {
            mask[0] = true;
        }
        queue.extend(self.ids().filter(|&i| mask[i]));
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.multiply(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }

    /// Sorted ids of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[ElementId]) -> Vec<ElementId> {
        let mask = self.subgroup_mask(gens);
        self.ids().filter(|&i| mask[i]).collect()
    }

    /// The derived subgroup, as the normal closure of the commutators of
    /// generator pairs.
    pub fn derived_subgroup(&self) -> &[ElementId] {
        self.derived.get_or_init(|| {
            let mut hgens: Vec<ElementId> = Vec::new();
            for &a in &self.generators {
                for &b in &self.generators {
                    let c = self.commutator(a, b);
                    if c != self.identity() && !hgens.contains(&c) {
                        hgens.push(c);
                    }
                }
            }
            let mut mask = self.subgroup_mask(&hgens);
            let mut i = 0;
            while i < hgens.len() {
                let h = hgens[i];
                for &g in &self.generators {
                    let c = self.conjugate(h, g);
                    if !mask[c] {
                        hgens.push(c);
                        // regenerate from all generators found so far
                        self.extend_subgroup(&mut mask, &hgens);
                    }
                }
                i += 1;
            }
            self.ids().filter(|&x| mask[x]).collect()
        })
    }
}
