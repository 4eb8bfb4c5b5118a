//! Theorem checkers. Each one evaluates a hypothesis on a concrete group,
//! and when it holds, measures the commuting graph and tests the conclusion.
//! Everything is recomputed from the group; nothing is carried over between
//! instances.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{factorize, prime_divisors};
use crate::comgraph::{CommutingGraph, DiameterReport, Distance, Mode};
use crate::constructions::{central_product, construction_w, ult, wreath, Phi};
use crate::error::{Error, Result};
use crate::groups::{ElementId, FiniteGroup, GroupElement, Matrix};

/// One named predicate with its outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Condition {
    fn new(name: &str, holds: bool, detail: impl Into<String>) -> Self {
        Condition { name: name.to_string(), holds, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub elements: Vec<ElementId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instance: String,
    pub hypothesis_satisfied: bool,
    pub hypothesis: Vec<Condition>,
    /// True when the conclusion was evaluated; only ever set with the hypothesis.
    pub conclusion_checked: bool,
    pub conclusion: Vec<Condition>,
    pub measured: BTreeMap<String, Value>,
    pub certificates: Vec<Certificate>,
    pub elapsed_ms: f64,
}

impl TheoremReport {
    fn new(theorem: &str) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            instance: String::new(),
            hypothesis_satisfied: false,
            hypothesis: Vec::new(),
            conclusion_checked: false,
            conclusion: Vec::new(),
            measured: BTreeMap::new(),
            certificates: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn with_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }

    /// All conclusion predicates hold (vacuously true when none were checked).
    pub fn conclusion_holds(&self) -> bool {
        self.conclusion.iter().all(|c| c.holds)
    }

    /// The report is consistent with the theorem: either the hypothesis
    /// failed or the conclusion was checked and holds.
    pub fn passed(&self) -> bool {
        !self.hypothesis_satisfied || (self.conclusion_checked && self.conclusion_holds())
    }

    fn measure(&mut self, key: &str, value: impl Serialize) {
        self.measured.insert(key.to_string(), json!(value));
    }

    fn set_hypothesis(&mut self, conditions: Vec<Condition>) {
        self.hypothesis_satisfied = conditions.iter().all(|c| c.holds);
        self.hypothesis = conditions;
    }

    fn conclude(&mut self, conditions: Vec<Condition>) {
        debug_assert!(self.hypothesis_satisfied);
        self.conclusion_checked = true;
        self.conclusion = conditions;
    }

    fn finish(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }
}

/// Diameter report of `Σ(G)` in transversal mode, `None` for abelian groups.
pub fn measure_diameter(g: &FiniteGroup) -> Option<DiameterReport> {
    CommutingGraph::build(g, Mode::Transversal).ok().map(|graph| graph.diameter())
}

fn diameter_of(g: &FiniteGroup) -> Option<Distance> {
    measure_diameter(g).map(|r| r.diameter)
}

fn record_diameter(report: &mut TheoremReport, key: &str, d: Option<Distance>) {
    match d {
        Some(d) => report.measure(key, d),
        None => report.measure(key, "empty"),
    }
}

/// If `G' <= Z(G)` and `|Z(G)|^3 < |G|` then `Σ(G)` has diameter 2.
pub fn check_small_centre(g: &FiniteGroup) -> TheoremReport {
    let start = Instant::now();
    let mut report = TheoremReport::new("small-centre");
    let center = g.center();
    let derived = g.derived_subgroup();
    let z = center.len() as u128;
    report.measure("order", g.order());
    report.measure("center_order", center.len());
    report.measure("derived_order", derived.len());
    report.set_hypothesis(vec![
        Condition::new(
            "derived subgroup inside center",
            derived.iter().all(|&d| g.is_central(d)),
            format!("|G'| = {}", derived.len()),
        ),
        Condition::new(
            "|Z|^3 < |G|",
            z * z * z < g.order() as u128,
            format!("{}^3 = {} vs {}", z, z * z * z, g.order()),
        ),
    ]);
    let d = diameter_of(g);
    record_diameter(&mut report, "diameter", d);
    if report.hypothesis_satisfied {
        report.conclude(vec![Condition::new(
            "diameter is 2",
            d == Some(Distance::Finite(2)),
            format!("{d:?}"),
        )]);
    }
    report.finish(start)
}

/// If `|G : Z(G)|` is a product of at most three primes then `Σ(G)` is disconnected.
pub fn check_prime_centre_index(g: &FiniteGroup) -> TheoremReport {
    let start = Instant::now();
    let mut report = TheoremReport::new("prime-centre");
    let index = (g.order() / g.center().len()) as u64;
    let factors = factorize(index);
    report.measure("order", g.order());
    report.measure("center_order", g.center().len());
    report.measure("center_index", index);
    report.measure("center_index_factors", &factors);
    report.set_hypothesis(vec![
        Condition::new("group is non-abelian", index > 1, format!("index {index}")),
        Condition::new(
            "index has at most 3 prime factors",
            !factors.is_empty() && factors.len() <= 3,
            format!("{factors:?}"),
        ),
    ]);
    let r = measure_diameter(g);
    if let Some(r) = &r {
        report.measure("connected", r.connected);
        report.measure("component_count", r.component_count);
    }
    if report.hypothesis_satisfied {
        let connected = r.as_ref().is_some_and(|r| r.connected);
        report.conclude(vec![Condition::new(
            "commuting graph is disconnected",
            !connected,
            format!("components: {:?}", r.map(|r| r.component_count)),
        )]);
    }
    report.finish(start)
}

/// Number of conjugacy classes of `a` consisting of elements of order `k`.
pub fn classes_of_order(a: &FiniteGroup, k: u64) -> usize {
    let orders = a.orders();
    a.conjugacy_classes()
        .iter()
        .filter(|c| orders[c[0]] as u64 == k)
        .count()
}

/// Hypothesis of the wreath-product diameter bound for `A wr S_n`.
pub fn wreath_hypothesis(a: &FiniteGroup, n: usize) -> Vec<Condition> {
    let mut conds = vec![
        Condition::new("n >= 2", n >= 2, format!("n = {n}")),
        Condition::new("|A| even", a.order().is_multiple_of(2), format!("|A| = {}", a.order())),
        Condition::new(
            "Z(A) trivial",
            a.center().len() == 1,
            format!("|Z(A)| = {}", a.center().len()),
        ),
    ];
    for p in prime_divisors(a.order() as u64).into_iter().filter(|&p| p != 2) {
        let count = classes_of_order(a, p);
        conds.push(Condition::new(
            &format!("order-{p} classes < n"),
            count < n,
            format!("{count} classes of elements of order {p}"),
        ));
    }
    conds
}

/// Builds `A wr S_n`; when the hypothesis holds, checks that the commuting
/// graph is connected with diameter at most 7. The exact diameter is always recorded.
pub fn check_wreath_theorem(a: &FiniteGroup, n: usize, max_order: usize) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("wreath");
    report.set_hypothesis(wreath_hypothesis(a, n));
    let g = wreath(a, n, max_order)?;
    report.measure("order", g.order());
    let r = measure_diameter(&g);
    record_diameter(&mut report, "diameter", r.as_ref().map(|r| r.diameter));
    if let Some(r) = &r {
        report.measure("connected", r.connected);
        report.certificates.push(Certificate {
            name: "diameter witness path".into(),
            elements: r.witness_path.clone(),
        });
    }
    if report.hypothesis_satisfied {
        let d = r.as_ref().map(|r| r.diameter);
        report.conclude(vec![
            Condition::new("connected", r.as_ref().is_some_and(|r| r.connected), ""),
            Condition::new(
                "diameter <= 7",
                matches!(d, Some(Distance::Finite(x)) if x <= 7),
                format!("{d:?}"),
            ),
        ]);
    }
    Ok(report.finish(start))
}

/// Central products: both factors non-abelian gives `diam ≤ min{3, diam H, diam K}`
/// (disconnected terms count as unbounded); exactly one abelian factor gives
/// equality with the other factor's diameter, disconnection included.
pub fn check_central_product_theorem(
    h: &FiniteGroup,
    k: &FiniteGroup,
    phi: Phi,
    max_order: usize,
) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("central-product");
    let g = central_product(h, k, phi, max_order)?;
    let (dh, dk, dg) = (diameter_of(h), diameter_of(k), diameter_of(&g));
    report.measure("order", g.order());
    report.measure("center_order", g.center().len());
    record_diameter(&mut report, "diameter_left", dh);
    record_diameter(&mut report, "diameter_right", dk);
    record_diameter(&mut report, "diameter", dg);
    let (ha, ka) = (h.is_abelian(), k.is_abelian());
    report.set_hypothesis(vec![
        Condition::new("product is non-abelian", !g.is_abelian(), ""),
        Condition::new("at least one factor non-abelian", !(ha && ka), ""),
    ]);
    if report.hypothesis_satisfied {
        let dg = dg.expect("non-abelian");
        let cond = if !ha && !ka {
            let bound = [dh, dk]
                .into_iter()
                .flatten()
                .filter_map(|d| d.finite())
                .fold(3, usize::min);
            report.measure("case", "both non-abelian");
            report.measure("bound", bound);
            Condition::new(
                "diameter <= min{3, diam H, diam K}",
                dg <= Distance::Finite(bound),
                format!("{dg} <= {bound}"),
            )
        } else {
            let other = if ha { dk } else { dh }.expect("non-abelian factor");
            report.measure("case", "one abelian factor");
            Condition::new(
                "diameter equals the non-abelian factor's",
                dg == other,
                format!("{dg} vs {other}"),
            )
        };
        report.conclude(vec![cond]);
    }
    Ok(report.finish(start))
}

/// An involution commuting with the prime-order element `g`, found by
/// exhaustive search (`g` itself when it is an involution).
pub fn prime_order_involution_witness(g: &FiniteGroup, x: ElementId) -> Result<ElementId> {
    let ord = g.element_order(x);
    if !crate::arith::is_prime(ord) {
        return Err(Error::Precondition(format!("element {x} has order {ord}, not prime")));
    }
    if ord == 2 {
        return Ok(x);
    }
    let orders = g.orders();
    g.ids()
        .find(|&y| orders[y] == 2 && g.commutes(x, y))
        .ok_or(Error::NoWitness(x))
}

/// With trivial center and at least two classes of involutions, every two
/// involutions lie within distance 3 of each other.
pub fn brauer_fowler_check(g: &FiniteGroup) -> TheoremReport {
    let start = Instant::now();
    let mut report = TheoremReport::new("involution-distance");
    let involutions = g.elements_of_order(2);
    let classes = classes_of_order(g, 2);
    report.measure("involutions", involutions.len());
    report.measure("involution_classes", classes);
    report.set_hypothesis(vec![
        Condition::new("Z(G) trivial", g.center().len() == 1, format!("|Z| = {}", g.center().len())),
        Condition::new("at least two involution classes", classes >= 2, format!("{classes}")),
    ]);
    let max = CommutingGraph::build(g, Mode::Transversal).ok().and_then(|graph| {
        let noncentral: Vec<ElementId> =
            involutions.iter().copied().filter(|&x| !g.is_central(x)).collect();
        graph.max_distance_within(&noncentral).ok()
    });
    if let Some(m) = max {
        report.measure("max_involution_distance", m);
    }
    if report.hypothesis_satisfied {
        report.conclude(vec![Condition::new(
            "involutions pairwise within distance 3",
            matches!(max, Some(Distance::Finite(d)) if d <= 3),
            format!("{max:?}"),
        )]);
    }
    report.finish(start)
}

/// For commuting non-central `x`, `y`: every two non-central elements of the
/// union of cosets in `<xZ, yZ>` commute.
pub fn coset_clique_check(g: &FiniteGroup, x: ElementId, y: ElementId) -> Result<bool> {
    if g.is_central(x) || g.is_central(y) {
        return Err(Error::Precondition("both elements must be non-central".into()));
    }
    if !g.commutes(x, y) {
        return Err(Error::Precondition(format!("{x} and {y} do not commute")));
    }
    let mut gens = vec![x, y];
    gens.extend_from_slice(g.center());
    let members: Vec<ElementId> = g
        .subgroup_generated(&gens)
        .into_iter()
        .filter(|&m| !g.is_central(m))
        .collect();
    Ok(members
        .iter()
        .enumerate()
        .all(|(i, &a)| members[i + 1..].iter().all(|&b| g.commutes(a, b))))
}

/// Nilpotent groups: either a p-group, or the commuting graph has diameter
/// at most 3 or is disconnected.
pub fn check_nilpotent_corollary(g: &FiniteGroup) -> TheoremReport {
    let start = Instant::now();
    let mut report = TheoremReport::new("nilpotent");
    let orders = g.orders();
    // finite groups are nilpotent exactly when elements of coprime order commute
    let nilpotent = g.ids().all(|a| {
        g.ids().all(|b| gcd(orders[a] as u64, orders[b] as u64) != 1 || g.commutes(a, b))
    });
    let primes = prime_divisors(g.order() as u64);
    report.measure("primes", &primes);
    report.set_hypothesis(vec![
        Condition::new("nilpotent", nilpotent, ""),
        Condition::new("non-abelian", !g.is_abelian(), ""),
    ]);
    let d = diameter_of(g);
    record_diameter(&mut report, "diameter", d);
    if report.hypothesis_satisfied {
        let d = d.expect("non-abelian");
        report.conclude(vec![Condition::new(
            "p-group, diameter <= 3, or disconnected",
            primes.len() == 1 || d <= Distance::Finite(3) || d.is_infinite(),
            format!("{d}"),
        )]);
    }
    report.finish(start)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn ult_matrix(n: usize, p: u64, entries: &[(usize, usize, u8)]) -> GroupElement {
    let mut m = Matrix::identity(n, p as u8);
    for &(r, c, v) in entries {
        m.entries[r * n + c] = v;
    }
    GroupElement::Matrix(m)
}

/// `ULT(n,p)` certificates: disconnected for `n = 3`, and for `n >= 4` the
/// diameter is 3, the pair `A = I + subdiagonal`, `B = I + E_{2,1}` has
/// centralisers meeting exactly in the center, and the abelian set
/// `{I + x E_{n-1,1} + y E_{n,2}}` dominates every non-central element.
pub fn ult_certificate(n: usize, p: u64, max_order: usize) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("unitriangular");
    let g = ult(n, p, max_order)?;
    report.measure("order", g.order());
    report.measure("center_order", g.center().len());
    report.set_hypothesis(vec![Condition::new("n >= 3", n >= 3, format!("n = {n}"))]);
    let r = measure_diameter(&g).expect("ULT(n,p) is non-abelian for n >= 3");
    report.measure("diameter", r.diameter);
    report.measure("connected", r.connected);
    if !report.hypothesis_satisfied {
        return Ok(report.finish(start));
    }
    if n == 3 {
        report.conclude(vec![Condition::new(
            "commuting graph disconnected",
            !r.connected,
            format!("{} components", r.component_count),
        )]);
        return Ok(report.finish(start));
    }
    let sub: Vec<(usize, usize, u8)> = (0..n - 1).map(|i| (i + 1, i, 1)).collect();
    let a = g.id_of(&ult_matrix(n, p, &sub)).expect("A in ULT");
    let b = g.id_of(&ult_matrix(n, p, &[(1, 0, 1)])).expect("B in ULT");
    let ca = g.centralizer(a);
    let cb = g.centralizer(b);
    let common: Vec<ElementId> = ca.iter().copied().filter(|x| cb.binary_search(x).is_ok()).collect();
    let graph = CommutingGraph::build(&g, Mode::Full)?;
    let (dab, _) = graph.distance(a, b)?;
    report.certificates.push(Certificate { name: "A, B".into(), elements: vec![a, b] });

    // the dominating set, with E_{n,2} at 0-based (n-1, 1)
    let dom = dominating_set(&g, n, p, (n - 1, 1));
    let dom_pairwise = dom.iter().all(|&x| dom.iter().all(|&y| g.commutes(x, y)));
    let dom_noncentral = dom.iter().all(|&x| !g.is_central(x));
    let dominated = g
        .ids()
        .filter(|&x| !g.is_central(x))
        .all(|x| dom.iter().any(|&d| g.commutes(x, d)));
    // the reading with E_{n,1} instead puts central matrices in the set
    let alt = dominating_set(&g, n, p, (n - 1, 0));
    report.measure("alternative_set_meets_center", alt.iter().any(|&x| g.is_central(x)));
    report.measure("distance_A_B", dab);

    report.conclude(vec![
        Condition::new("diameter is 3", r.diameter == Distance::Finite(3), format!("{}", r.diameter)),
        Condition::new(
            "C(A) ∩ C(B) = Z(G)",
            common == g.center(),
            format!("{} common elements", common.len()),
        ),
        Condition::new("d(A, B) = 3", dab == Distance::Finite(3), format!("{dab}")),
        Condition::new(
            "dominating set is abelian, non-central and dominates",
            dom_pairwise && dom_noncentral && dominated,
            format!("{} members", dom.len()),
        ),
    ]);
    Ok(report.finish(start))
}

fn dominating_set(g: &FiniteGroup, n: usize, p: u64, second: (usize, usize)) -> Vec<ElementId> {
    let mut out = Vec::new();
    for x in 0..p as u8 {
        for y in 0..p as u8 {
            if x == 0 && y == 0 {
                continue;
            }
            let m = ult_matrix(n, p, &[(n - 2, 0, x), (second.0, second.1, y)]);
            out.push(g.id_of(&m).expect("unitriangular"));
        }
    }
    out
}

/// Lemma-level certificates for `W_p`, assertions (a) through (k).
pub fn w_certificates(p: u64, max_order: usize) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut report = TheoremReport::new("w-family");
    let (g, params) = construction_w(p, max_order)?;
    report.set_hypothesis(vec![Condition::new("p prime, p = 1 mod 3", true, format!("p = {p}"))]);
    report.measure("order", g.order());
    report.measure("alpha", params.alpha);
    report.measure("beta", params.beta);

    let id = |vec: [u64; 2], mat: [u8; 4]| g.id_of(&params.element(vec, mat)).expect("in W");
    let ident = params.identity_matrix();
    let minus_i = id([0, 0], params.minus_identity());
    let a = id([1, 1], params.minus_identity());
    let w = id([0, 1], ident);
    let orders = g.orders();
    let order_of = |x: ElementId| orders[x] as u64;
    let is_linear = |x: ElementId| g.encoding(x)[..2] == [0, 0];
    let mut concl = Vec::new();

    // (a)
    let c_minus = g.centralizer(minus_i);
    let s: Vec<ElementId> = g.ids().filter(|&x| is_linear(x)).collect();
    concl.push(Condition::new(
        "(a) C(-I) = S, |S| = 24",
        c_minus == s && s.len() == 24,
        format!("|C(-I)| = {}", c_minus.len()),
    ));

    // (b)
    let involutions = g.elements_of_order(2);
    let inv_sizes: Vec<usize> = involutions.iter().map(|&x| g.centralizer(x).len()).collect();
    concl.push(Condition::new(
        "(b) involution centralisers have order 24",
        inv_sizes.iter().all(|&s| s == 24),
        format!("{} involutions", involutions.len()),
    ));

    // (c)
    let order46: Vec<ElementId> = g.ids().filter(|&x| matches!(order_of(x), 4 | 6)).collect();
    let cyclic46 = order46.iter().all(|&x| g.centralizer(x).len() as u64 == order_of(x));
    let bad_orders = g.ids().filter(|&x| matches!(order_of(x), 8 | 12 | 24)).count();
    report.measure("elements_of_order_8_12_24", bad_orders);
    concl.push(Condition::new(
        "(c) order-4/6 centralisers cyclic; no elements of order 8, 12, 24",
        cyclic46 && bad_orders == 0,
        format!("{} elements of order 4 or 6", order46.len()),
    ));

    // (d)
    concl.push(Condition::new(
        "(d) Z(W) trivial",
        g.center() == [g.identity()],
        format!("|Z| = {}", g.center().len()),
    ));

    // (e)
    let ca = g.centralizer(a);
    let both: Vec<ElementId> = c_minus.iter().copied().filter(|x| ca.binary_search(x).is_ok()).collect();
    concl.push(Condition::new(
        "(e) C(-I) ∩ C(((1,1),-I)) = {e}",
        both == [g.identity()],
        format!("{both:?}"),
    ));

    // (f)
    let graph = CommutingGraph::build(&g, Mode::Transversal)?;
    let (dab, _) = graph.distance(a, minus_i)?;
    let least_order4 = |set: &[ElementId]| {
        set.iter()
            .copied()
            .filter(|&x| order_of(x) == 4)
            .min_by(|&x, &y| g.encoding(x).cmp(g.encoding(y)))
            .expect("order-4 element")
    };
    let q = least_order4(&ca);
    let r = least_order4(&s);
    let (dqr, qr_path) = graph.distance(q, r)?;
    report.measure("distance_a_minus_i", dab);
    report.measure("distance_q_r", dqr);
    report.certificates.push(Certificate { name: "a, -I".into(), elements: vec![a, minus_i] });
    report.certificates.push(Certificate { name: "q, r path".into(), elements: qr_path });
    concl.push(Condition::new(
        "(f) d(a, -I) >= 4 and d(q, r) = 6",
        dab >= Distance::Finite(4) && dqr == Distance::Finite(6),
        format!("d(a,-I) = {dab}, d(q,r) = {dqr}"),
    ));

    // (g)
    let order_p: Vec<ElementId> = g.ids().filter(|&x| order_of(x) == p).collect();
    let threes = g.elements_of_order(3);
    concl.push(Condition::new(
        "(g) every order-3 element commutes with an order-p element",
        threes.iter().all(|&x| order_p.iter().any(|&y| g.commutes(x, y))),
        format!("{} elements of order 3", threes.len()),
    ));

    // (h)
    let from_w = graph.distances_from(w)?;
    let within2 = involutions
        .iter()
        .all(|&x| from_w[graph.vertex_of(x).unwrap()] <= Distance::Finite(2));
    let pp = p as i64;
    let inv = |x: i64| crate::arith::inv_mod(x.rem_euclid(pp) as u64, p) as i64;
    let two_beta_inv = inv(2 * params.beta as i64);
    let explicit_ok = involutions.iter().all(|&x| {
        let a1 = g.encoding(x)[0] as i64;
        let c1 = (a1 * (1 + params.beta as i64)).rem_euclid(pp) * two_beta_inv % pp;
        let c2 = (-a1 * params.alpha as i64).rem_euclid(pp) * two_beta_inv % pp;
        let c = id([c1 as u64, c2 as u64], params.z);
        c != g.identity() && g.commutes(c, x) && g.commutes(c, w)
    });
    concl.push(Condition::new(
        "(h) involutions within distance 2 of ((0,1),I)",
        within2 && explicit_ok,
        format!("explicit commuting element valid for all involutions: {explicit_ok}"),
    ));

    // (i)
    concl.push(Condition::new(
        "(i) order-p elements pairwise commute",
        order_p.iter().all(|&x| order_p.iter().all(|&y| g.commutes(x, y))),
        format!("{} elements of order p", order_p.len()),
    ));

    // (j)
    let ecc_w = from_w.iter().copied().max().unwrap();
    report.measure("eccentricity_w", ecc_w);
    concl.push(Condition::new(
        "(j) every vertex within distance 3 of ((0,1),I)",
        ecc_w <= Distance::Finite(3),
        format!("eccentricity {ecc_w}"),
    ));

    // (k)
    let diam = graph.diameter();
    report.measure("diameter", diam.diameter);
    concl.push(Condition::new(
        "(k) diameter is 6",
        diam.diameter == Distance::Finite(6),
        format!("{}", diam.diameter),
    ));

    report.conclude(concl);
    Ok(report.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extraspecial, standard_group, StandardGroup};
    use crate::groups::DEFAULT_MAX_ORDER as CAP;

    #[test]
    fn small_centre_fails_on_ult33() {
        let g = ult(3, 3, CAP).unwrap();
        let r = check_small_centre(&g);
        assert!(!r.hypothesis_satisfied);
        assert!(!r.conclusion_checked);
        assert!(r.hypothesis[0].holds);
        assert!(!r.hypothesis[1].holds);
    }

    #[test]
    fn small_centre_on_extraspecial_32() {
        let g = extraspecial(2, 2, CAP).unwrap();
        let r = check_small_centre(&g);
        assert!(r.hypothesis_satisfied && r.conclusion_checked && r.passed());
    }

    #[test]
    fn prime_index_quaternion() {
        let g = standard_group(StandardGroup::Quaternion8, CAP).unwrap();
        let r = check_prime_centre_index(&g);
        assert!(r.hypothesis_satisfied && r.passed());
        assert_eq!(r.measured["center_index_factors"], json!([2, 2]));
    }

    #[test]
    fn abelian_group_fails_prime_index_hypothesis() {
        let g = standard_group(StandardGroup::Cyclic(6), CAP).unwrap();
        let r = check_prime_centre_index(&g);
        assert!(!r.hypothesis_satisfied);
        assert!(!r.conclusion_checked);
    }

    #[test]
    fn involution_is_its_own_witness() {
        let s3 = standard_group(StandardGroup::Symmetric(3), CAP).unwrap();
        let g = wreath(&s3, 2, CAP).unwrap();
        let t = g.elements_of_order(2)[0];
        assert_eq!(prime_order_involution_witness(&g, t).unwrap(), t);
        let four = g.ids().find(|&x| g.element_order(x) == 4).unwrap();
        assert!(matches!(prime_order_involution_witness(&g, four), Err(Error::Precondition(_))));
    }

    #[test]
    fn clique_preconditions() {
        let g = standard_group(StandardGroup::Quaternion8, CAP).unwrap();
        let z = g.center()[0];
        let x = g.ids().find(|&x| !g.is_central(x)).unwrap();
        assert!(coset_clique_check(&g, z, x).is_err());
        let y = g.ids().find(|&y| !g.is_central(y) && !g.commutes(x, y)).unwrap();
        assert!(coset_clique_check(&g, x, y).is_err());
        assert!(coset_clique_check(&g, x, x).unwrap());
        assert!(coset_clique_check(&g, x, g.power(x, 3)).unwrap());
    }
}
