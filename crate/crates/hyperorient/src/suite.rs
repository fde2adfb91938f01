//! Seeded oracle and property suites with a plain-text report.
//!
//! Report grammar, one item per line:
//!
//! ```text
//! suite <name> seed=<seed>
//! criterion <id> <slug> size=<n|default> cases=<c> failures=<f> PASS|FAIL
//!   counterexample <i>: <detail>
//! ```
//!
//! At most three counterexamples are dumped per criterion.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use hyperorient_core::encoding::{refine_to_injective, verify_encoding};
use hyperorient_core::flows::{
    self, cancel_cycles, check_delta_flow, compute_delta_flow, decompose_flow_paths, is_acyclic,
    Distribution, Flow,
};
use hyperorient_core::order::Order;
use hyperorient_core::spanning::{
    aux_order, branches, build_dfst, build_priority_tree, dfst_orientation, edge_order,
    priority_tree_linear_order, validate_dfst, DEFAULT_BRANCH_CAP,
};
use hyperorient_core::sparsity::{
    antisymmetric_orientation_traced, bounded_orientation_traced, directed_quotient, is_k_sparse,
    is_k_sparse_bruteforce, DEFAULT_BRUTE_FORCE_CAP,
};
use hyperorient_core::{EdgeId, Hypergraph, UndirectedGraph, VertexId};
use rand::Rng;

use crate::generate;

const DUMP_LIMIT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteName {
    /// Criteria 1 and 3: fast algorithms against brute force.
    Oracle,
    /// Criteria 2 and 4 to 10.
    Lemmas,
    /// Criterion 11: the full set-encoding pipeline.
    Pipeline,
    /// Criterion 12: every other criterion run twice and compared.
    Determinism,
    All,
}

impl SuiteName {
    pub fn criteria(self) -> &'static [usize] {
        match self {
            SuiteName::Oracle => &[1, 3],
            SuiteName::Lemmas => &[2, 4, 5, 6, 7, 8, 9, 10],
            SuiteName::Pipeline => &[11],
            SuiteName::Determinism => &[12],
            SuiteName::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            SuiteName::Oracle => "oracle",
            SuiteName::Lemmas => "lemmas",
            SuiteName::Pipeline => "pipeline",
            SuiteName::Determinism => "determinism",
            SuiteName::All => "all",
        }
    }
}

/// The result of one criterion on one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: usize,
    pub slug: &'static str,
    pub size: Option<usize>,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    fn new(id: usize, size: Option<usize>) -> Self {
        Self {
            id,
            slug: slug(id),
            size,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn render(&self) -> String {
        let size = self.size.map_or("default".to_string(), |n| n.to_string());
        let mut out = format!(
            "criterion {} {} size={size} cases={} failures={} {}\n",
            self.id,
            self.slug,
            self.cases,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" },
        );
        for (i, f) in self.failures.iter().take(DUMP_LIMIT).enumerate() {
            writeln!(out, "  counterexample {i}: {f}").unwrap();
        }
        out
    }
}

pub fn slug(id: usize) -> &'static str {
    match id {
        1 => "sparsity-oracle",
        2 => "low-degree-sparse",
        3 => "grid-3-sparse",
        4 => "bounded-orientation",
        5 => "antisymmetric-orientation",
        6 => "dfst-validity",
        7 => "priority-tree",
        8 => "delta-flow",
        9 => "cycle-canceling",
        10 => "path-decomposition",
        11 => "set-encoding",
        12 => "determinism",
        _ => "unknown",
    }
}

/// Default largest vertex count for each criterion.
pub fn default_size(id: usize) -> usize {
    match id {
        1 | 4 | 5 => 12,
        2 => 40,
        3 => 20,
        6 => 30,
        7 => 12,
        8..=11 => 25,
        _ => 0,
    }
}

fn dump_hypergraph(h: &Hypergraph) -> String {
    let edges: Vec<String> = h
        .edge_ids()
        .map(|e| {
            let vs: Vec<String> = h.edge(e).iter().map(|v| v.0.to_string()).collect();
            vs.join(" ")
        })
        .collect();
    format!("n={} edges=[{}]", h.vertex_count(), edges.join("|"))
}

fn dump_values(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(" "))
}

fn dump_flow(f: &Flow) -> String {
    let parts: Vec<String> = f
        .entries()
        .map(|(u, v, x)| format!("{}-{}:{x}", u.0, v.0))
        .collect();
    format!("{{{}}}", parts.join(" "))
}

// -- shared instance families ------------------------------------------------

/// Criteria 1, 4 and 5: 200 hypergraphs with rank ≤ 4.
fn sparsity_instances(seed: u64, size: usize) -> Vec<Hypergraph> {
    let mut rng = generate::rng(seed, 1);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=size.max(1));
            let rank = rng.gen_range(1..=4);
            let m = rng.gen_range(0..=3 * n);
            generate::hypergraph(&mut rng, n, rank, m)
        })
        .collect()
}

struct FlowInstance {
    g: UndirectedGraph,
    d: Distribution,
    k: usize,
}

/// Criteria 8 to 10: 200 `k`-sparse distributions with `k ≤ 3`.
fn flow_instances(seed: u64, size: usize) -> Vec<FlowInstance> {
    let mut rng = generate::rng(seed, 8);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=size.max(1));
            let m = rng.gen_range(0..=2 * n);
            let g = generate::graph(&mut rng, n, m);
            let k = rng.gen_range(1..=3);
            let d = generate::sparse_distribution(&mut rng, &g, k, 2 * k + 1);
            FlowInstance { g, d, k }
        })
        .collect()
}

// -- criteria ----------------------------------------------------------------

fn sparsity_oracle(seed: u64, size: usize, out: &mut Outcome) {
    for (i, h) in sparsity_instances(seed, size).iter().enumerate() {
        for k in 1..=3 {
            let fast = is_k_sparse(h, k);
            let slow = is_k_sparse_bruteforce(h, k, DEFAULT_BRUTE_FORCE_CAP);
            let agree = slow.as_ref().is_ok_and(|s| s.is_sparse == fast.is_sparse);
            let witness_ok = fast.witness.as_ref().is_none_or(|w| {
                let x: BTreeSet<VertexId> = w.iter().copied().collect();
                hyperorient_core::sparsity::induced_edge_count(h, &x) > k * x.len()
            });
            out.check(agree && witness_ok, || {
                format!(
                    "hypergraph {i} k={k} fast={} {}",
                    fast.is_sparse,
                    dump_hypergraph(h)
                )
            });
        }
    }
    let mut rng = generate::rng(seed, 101);
    for i in 0..200 {
        let n = rng.gen_range(1..=size.max(1));
        let m = rng.gen_range(0..=2 * n);
        let g = generate::graph(&mut rng, n, m);
        let d = generate::distribution(&mut rng, n, 4);
        for k in 1..=3 {
            let fast = flows::is_k_sparse_distribution(&g, &d, k).expect("lengths agree");
            let slow =
                flows::is_k_sparse_distribution_bruteforce(&g, &d, k, DEFAULT_BRUTE_FORCE_CAP);
            let agree = slow.as_ref().is_ok_and(|s| s.is_sparse == fast.is_sparse);
            let witness_ok = fast.witness.as_ref().is_none_or(|w| {
                let z: BTreeSet<VertexId> = w.iter().copied().collect();
                d.sum_over(w) > z.len() + k * flows::border(&g, &z).len()
            });
            out.check(agree && witness_ok, || {
                format!(
                    "distribution {i} k={k} fast={} {} delta={}",
                    fast.is_sparse,
                    dump_hypergraph(g.hypergraph()),
                    dump_values(d.values())
                )
            });
        }
    }
}

fn low_degree_sparse(seed: u64, size: usize, out: &mut Outcome) {
    let mut rng = generate::rng(seed, 2);
    for i in 0..100 {
        let k = i % 3 + 1;
        let n = rng.gen_range(2..=size.max(2));
        let g = generate::bounded_degree_graph(&mut rng, n, 2 * k);
        let ok = g.max_degree() <= 2 * k && is_k_sparse(g.hypergraph(), k).is_sparse;
        out.check(ok, || {
            format!("graph {i} k={k} {}", dump_hypergraph(g.hypergraph()))
        });
    }
}

fn grid_3_sparse(size: usize, out: &mut Outcome) {
    for rows in 1..=4 {
        for cols in 1..=5 {
            if rows * cols > size {
                continue;
            }
            let g = generate::grid(rows, cols);
            let r = is_k_sparse_bruteforce(g.hypergraph(), 3, DEFAULT_BRUTE_FORCE_CAP);
            out.check(r.is_ok_and(|r| r.is_sparse), || {
                format!("grid {rows}x{cols}")
            });
        }
    }
}

fn strictly_decreasing_to_zero(trace: &[usize]) -> bool {
    trace.windows(2).all(|w| w[1] < w[0]) && trace.last() == Some(&0)
}

fn bounded_orientation(seed: u64, size: usize, out: &mut Outcome) {
    for (i, h) in sparsity_instances(seed, size).iter().enumerate() {
        for k in 1..=3 {
            if !is_k_sparse(h, k).is_sparse {
                continue;
            }
            let ok = match bounded_orientation_traced(h, k) {
                Ok((f, trace)) => {
                    f.is_bounded_by(k)
                        && strictly_decreasing_to_zero(&trace)
                        && h.edge_ids().all(|e| h.contains(e, f.head(e)))
                }
                Err(_) => false,
            };
            out.check(ok, || {
                format!("hypergraph {i} k={k} {}", dump_hypergraph(h))
            });
        }
    }
}

fn antisymmetric_orientation(seed: u64, size: usize, out: &mut Outcome) {
    for (i, h) in sparsity_instances(seed, size).iter().enumerate() {
        let m = h.rank();
        if m < 2 {
            continue;
        }
        for k in 1..=3 {
            if !is_k_sparse(h, k).is_sparse {
                continue;
            }
            let ok = match antisymmetric_orientation_traced(h, k) {
                Ok((f, trace)) => {
                    f.is_bounded_by(m * k * k)
                        && directed_quotient(h, &f).opposite_pair().is_none()
                        && strictly_decreasing_to_zero(&trace)
                }
                Err(_) => false,
            };
            out.check(ok, || {
                format!("hypergraph {i} k={k} {}", dump_hypergraph(h))
            });
        }
    }
}

fn dfst_validity(seed: u64, size: usize, out: &mut Outcome) {
    let mut rng = generate::rng(seed, 6);
    for i in 0..100 {
        let n = rng.gen_range(1..=size.max(1));
        let rank = rng.gen_range(2..=4);
        let extra = rng.gen_range(0..=n);
        let h = generate::connected_hypergraph(&mut rng, n, rank, extra);
        let root = VertexId(rng.gen_range(0..n));
        let ok = build_dfst(&h, root).is_ok_and(|t| {
            let order = aux_order(&h, &t);
            validate_dfst(&h, &t).is_empty()
                && t.covered().len() == h.vertex_count()
                && h.edge_ids().all(|e| order.is_total_on(h.edge(e)))
        }) && dfst_orientation(&h)
            .is_ok_and(|f| h.edge_ids().all(|e| h.contains(e, f.head(e))));
        out.check(ok, || {
            format!("hypergraph {i} root={} {}", root.0, dump_hypergraph(&h))
        });
    }
}

fn priority_tree(seed: u64, size: usize, out: &mut Outcome) {
    let mut rng = generate::rng(seed, 7);
    for i in 0..100 {
        let n = rng.gen_range(2..=size.max(2));
        let rank = rng.gen_range(2..=3);
        let extra = rng.gen_range(0..=n / 2);
        let h = generate::connected_hypergraph(&mut rng, n, rank, extra);
        let root = VertexId(rng.gen_range(0..n));
        let l0 = generate::edge_subset(&mut rng, &h, 4);
        let verdict = check_priority_tree(&h, root, &l0);
        out.check(verdict.is_ok(), || {
            format!(
                "triple {i} root={} L0={:?} {} ({})",
                root.0,
                l0.iter().map(|e| e.0).collect::<Vec<_>>(),
                dump_hypergraph(&h),
                verdict.unwrap_err()
            )
        });
    }
}

fn check_priority_tree(h: &Hypergraph, root: VertexId, l0: &[EdgeId]) -> Result<(), String> {
    let t = build_priority_tree(h, root, l0).map_err(|e| e.to_string())?;
    let nodes: BTreeSet<VertexId> = t.nodes().collect();
    if !h.union_of(l0.iter().copied()).is_subset(&nodes) {
        return Err("leaf edges not covered".into());
    }
    if !t.leaves().iter().all(|e| l0.contains(e)) {
        return Err("leaf outside L0".into());
    }
    let order = edge_order(h, &t, DEFAULT_BRANCH_CAP).map_err(|e| e.to_string())?;
    if let Some(v) = order.tree_order_violation() {
        let on_branch: BTreeSet<EdgeId> = branches(h, &t, DEFAULT_BRANCH_CAP)
            .map_err(|e| e.to_string())?
            .iter()
            .flat_map(|b| b.edges().to_vec())
            .collect();
        let stranded: Vec<usize> = t
            .edges()
            .filter(|e| !on_branch.contains(e))
            .map(|e| e.0)
            .collect();
        return Err(format!(
            "edge order is not a tree order: {v:?}; edges on no branch {stranded:?}"
        ));
    }
    let linear: Order<VertexId> =
        priority_tree_linear_order(h, &t, None).map_err(|e| e.to_string())?;
    if !linear.is_linear() || linear.elements().iter().copied().collect::<BTreeSet<_>>() != nodes {
        return Err("vertex order is not linear on T".into());
    }
    Ok(())
}

fn delta_flow(seed: u64, size: usize, out: &mut Outcome) {
    for (i, x) in flow_instances(seed, size).iter().enumerate() {
        let ok = compute_delta_flow(&x.g, &x.d, x.k).is_ok_and(|f| {
            let (eb, vb) = f.bounds();
            check_delta_flow(&f, &x.d)
                && f.is_supported_on(&x.g)
                && eb <= x.k as i64
                && vb <= (x.g.max_degree() * x.k) as i64
                && vb >= eb
        });
        out.check(ok, || {
            format!(
                "instance {i} k={} {} delta={}",
                x.k,
                dump_hypergraph(x.g.hypergraph()),
                dump_values(x.d.values())
            )
        });
    }
}

fn canceling_preserves(f: &Flow) -> bool {
    let out = cancel_cycles(f);
    out.defect() == f.defect()
        && is_acyclic(&out)
        && out.edge_bound() <= f.edge_bound()
        && out.vertex_bound() <= f.vertex_bound()
}

fn cycle_canceling(seed: u64, size: usize, out: &mut Outcome) {
    for (i, x) in flow_instances(seed, size).iter().enumerate() {
        let f = compute_delta_flow(&x.g, &x.d, x.k);
        let ok = f.as_ref().is_ok_and(canceling_preserves);
        out.check(ok, || {
            format!(
                "instance {i} flow={}",
                f.map(|f| dump_flow(&f)).unwrap_or_default()
            )
        });
    }
    let mut rng = generate::rng(seed, 9);
    for i in 0..50 {
        let n = rng.gen_range(3..=size.max(3));
        let m = rng.gen_range(n..=3 * n);
        let g = generate::graph(&mut rng, n, m);
        let cycles = rng.gen_range(1..=6);
        let mut f = generate::circulation(&mut rng, &g, cycles, 3);
        // a path flow on top, so the result is not a pure circulation
        if let Some(e) = g.edge_ids().next() {
            let (u, v) = g.endpoints(e);
            let old = f.value(u, v);
            f.set(&g, u, v, old + 1).expect("e is an edge");
        }
        out.check(canceling_preserves(&f), || {
            format!(
                "circulation {i} {} flow={}",
                dump_hypergraph(g.hypergraph()),
                dump_flow(&f)
            )
        });
    }
}

fn path_decomposition(seed: u64, size: usize, out: &mut Outcome) {
    for (i, x) in flow_instances(seed, size).iter().enumerate() {
        let n = x.g.vertex_count();
        let ok = compute_delta_flow(&x.g, &x.d, x.k).is_ok_and(|f| {
            let f = cancel_cycles(&f);
            decompose_flow_paths(&x.g, &f, &x.d).is_ok_and(|p| {
                p.start_counts(n) == x.d.values()
                    && p.end_counts(n).iter().all(|&c| c <= 1)
                    && p.usages()
                        .all(|((a, b), used)| used as i64 <= f.value(a, b).max(0))
                    && p.paths().iter().all(|path| path.len() <= n + 1)
            })
        });
        out.check(ok, || {
            format!(
                "instance {i} k={} {} delta={}",
                x.k,
                dump_hypergraph(x.g.hypergraph()),
                dump_values(x.d.values())
            )
        });
    }
}

fn set_encoding(seed: u64, size: usize, out: &mut Outcome) {
    let mut rng = generate::rng(seed, 11);
    for i in 0..100 {
        let n = rng.gen_range(1..=size.max(1));
        let m = rng.gen_range(0..=2 * n);
        let g = generate::graph(&mut rng, n, m);
        let k = rng.gen_range(1..=3);
        let h = generate::set_function(&mut rng, &g, k, 60, 5);
        let ok = refine_to_injective(&g, &h, k).is_ok_and(|r| {
            let mut pre = vec![0usize; n];
            for &start in r.gmap.values() {
                pre[start.0] += 1;
            }
            verify_encoding(&h, &r.h0, &r.gmap) && pre == r.distribution.values()
        });
        out.check(ok, || {
            format!(
                "function {i} k={k} sets={} {}",
                h.len(),
                dump_hypergraph(g.hypergraph())
            )
        });
    }
}

fn determinism(seed: u64, size: Option<usize>, out: &mut Outcome) {
    for id in 1..=11 {
        let a = run_criterion(id, seed, size).render();
        let b = run_criterion(id, seed, size).render();
        out.check(a == b, || format!("criterion {id} differs between runs"));
    }
}

/// Runs one criterion; `size` overrides its default largest vertex count.
pub fn run_criterion(id: usize, seed: u64, size: Option<usize>) -> Outcome {
    let mut out = Outcome::new(id, size);
    let n = size.unwrap_or_else(|| default_size(id));
    match id {
        1 => sparsity_oracle(seed, n, &mut out),
        2 => low_degree_sparse(seed, n, &mut out),
        3 => grid_3_sparse(n, &mut out),
        4 => bounded_orientation(seed, n, &mut out),
        5 => antisymmetric_orientation(seed, n, &mut out),
        6 => dfst_validity(seed, n, &mut out),
        7 => priority_tree(seed, n, &mut out),
        8 => delta_flow(seed, n, &mut out),
        9 => cycle_canceling(seed, n, &mut out),
        10 => path_decomposition(seed, n, &mut out),
        11 => set_encoding(seed, n, &mut out),
        12 => determinism(seed, size, &mut out),
        _ => out.failures.push(format!("no criterion {id}")),
    }
    out
}

/// Runs every criterion of `name` once per entry of `sizes` (`None` meaning
/// each criterion's default). The report is a function of its arguments only.
pub fn run_suite(name: SuiteName, seed: u64, sizes: &[Option<usize>]) -> (String, Vec<Outcome>) {
    let mut report = format!("suite {} seed={seed}\n", name.as_str());
    let mut outcomes = Vec::new();
    for &size in sizes {
        for &id in name.criteria() {
            let o = run_criterion(id, seed, size);
            report.push_str(&o.render());
            outcomes.push(o);
        }
    }
    (report, outcomes)
}
