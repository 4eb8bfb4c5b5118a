#![allow(dead_code)]

use std::collections::VecDeque;

use comgraph_core::{
    Distance, ElementId, FiniteGroup, GroupSpec, Phi, StandardGroup, DEFAULT_MAX_ORDER,
};

pub fn std_spec(s: StandardGroup) -> GroupSpec {
    GroupSpec::Standard(s)
}

pub fn sym(n: usize) -> GroupSpec {
    std_spec(StandardGroup::Symmetric(n))
}
pub fn alt(n: usize) -> GroupSpec {
    std_spec(StandardGroup::Alternating(n))
}
pub fn cyc(n: usize) -> GroupSpec {
    std_spec(StandardGroup::Cyclic(n))
}
pub fn dih(n: usize) -> GroupSpec {
    std_spec(StandardGroup::Dihedral(n))
}
pub fn q8() -> GroupSpec {
    std_spec(StandardGroup::Quaternion8)
}
pub fn sl23() -> GroupSpec {
    std_spec(StandardGroup::Sl23)
}
pub fn wr(base: GroupSpec, n: usize) -> GroupSpec {
    GroupSpec::Wreath(Box::new(base), n)
}
pub fn cprod(h: GroupSpec, k: GroupSpec, phi: Phi) -> GroupSpec {
    GroupSpec::CentralProduct(Box::new(h), Box::new(k), phi)
}
pub fn dprod(h: GroupSpec, k: GroupSpec) -> GroupSpec {
    GroupSpec::DirectProduct(Box::new(h), Box::new(k))
}
pub fn ult(n: usize, p: u64) -> GroupSpec {
    GroupSpec::Ult(n, p)
}
pub fn extra(p: u64, r: usize) -> GroupSpec {
    GroupSpec::Extraspecial(p, r)
}
pub fn w(p: u64) -> GroupSpec {
    GroupSpec::ConstructionW(p)
}
pub fn gl37_witness() -> GroupSpec {
    GroupSpec::MatGroup {
        n: 3,
        p: 7,
        gens: vec![
            vec![vec![3, 6, 2], vec![2, 0, 1], vec![0, 0, 1]],
            vec![vec![0, 4, 1], vec![5, 0, 3], vec![0, 0, 1]],
        ],
    }
}

pub fn build(s: &GroupSpec) -> FiniteGroup {
    s.build(DEFAULT_MAX_ORDER).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Non-abelian test groups of order at most 2000.
pub fn small_nonabelian() -> Vec<GroupSpec> {
    vec![
        sym(3),
        sym(4),
        sym(5),
        alt(4),
        alt(5),
        dih(8),
        dih(10),
        dih(12),
        q8(),
        sl23(),
        ult(3, 3),
        ult(3, 5),
        ult(4, 2),
        ult(4, 3),
        ult(5, 2),
        extra(2, 2),
        extra(3, 2),
        w(7),
        gl37_witness(),
        wr(sym(3), 2),
        wr(sym(3), 3),
        wr(sym(4), 2),
        wr(dih(18), 2),
        cprod(q8(), q8(), Phi::Center),
        dprod(sym(3), cyc(2)),
        dprod(q8(), cyc(3)),
        dprod(dih(8), sym(3)),
    ]
}

/// Shortest path length in the full commuting graph, by BFS that queries the
/// group's product directly.
pub fn naive_distance(g: &FiniteGroup, u: ElementId, v: ElementId) -> Distance {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return Distance::Finite(dist[x]);
        }
        for y in g.ids() {
            if dist[y] == usize::MAX && !g.is_central(y) && g.commutes(x, y) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    Distance::Infinite
}

/// Ten central products `(H, K, phi)`, mixing non-abelian and abelian factors.
pub fn central_product_cases() -> Vec<(GroupSpec, GroupSpec, Phi)> {
    // Q8 o C4 identifies -1 with the involution of C4
    let q = build(&q8());
    let c4 = build(&cyc(4));
    let minus = *q.center().iter().find(|&&z| z != q.identity()).unwrap();
    let half = c4.elements_of_order(2)[0];
    vec![
        (q8(), q8(), Phi::Center),
        (q8(), dih(8), Phi::Center),
        (dih(8), dih(8), Phi::Center),
        (ult(3, 3), ult(3, 3), Phi::Center),
        (sl23(), q8(), Phi::Center),
        (ult(4, 2), cyc(3), Phi::Trivial),
        (sym(3), cyc(2), Phi::Trivial),
        (q8(), cyc(4), Phi::Ids(minus, half)),
        (wr(sym(3), 2), cyc(5), Phi::Trivial),
        (cyc(6), sym(4), Phi::Trivial),
    ]
}

/// The wreath products `A wr S_n` with their published diameters.
pub fn wreath_table() -> Vec<(GroupSpec, usize, usize)> {
    vec![
        (sym(3), 2, 4),
        (sym(3), 3, 4),
        (sym(4), 2, 4),
        (alt(4), 3, 4),
        (dih(10), 3, 4),
        (dih(18), 2, 5),
        (alt(5), 2, 5),
    ]
}
