//! C ABI over the ratioforge solvers.
//!
//! Graphs and results are opaque handles created and destroyed through this
//! interface. Every function returns an [`RfStatus`]; on failure the message
//! is available from [`rf_last_error`] on the same thread. Panics never
//! cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ratioforge::extract::best_prefix_dense;
use ratioforge::flow::{
    flow_dense_decomposition, flow_density_solver, flow_hnsn_solver_with, DensityInstance, FlowInstance,
    MaxFlowEngine,
};
use ratioforge::problems::{dsg_oracle, hnsn_oracle, UndirectedGraph, WeightedBipartiteGraph};
use ratioforge::setfn::{SetFunction, SolverConfig};
use ratioforge::universal::{solve, Algorithm};
use ratioforge::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    TooLarge = 3,
    Incompatible = 4,
    Internal = 5,
    Panic = 6,
}

/// Algorithm codes accepted as `int32_t` by the solver functions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfAlgo {
    SuperGreedy = 0,
    FrankWolfe = 1,
    FujishigeWolfe = 2,
    /// Exact, push-relabel.
    Flow = 3,
    /// Exact, Edmonds-Karp.
    ExactFlowBaseline = 4,
    Brute = 5,
}

/// Undirected graph handle.
pub struct RfGraph(UndirectedGraph);

/// Weighted bipartite graph handle.
pub struct RfBipartite(WeightedBipartiteGraph);

/// Solver output handle.
pub struct RfResult {
    set: Vec<usize>,
    value: f64,
    point: Vec<f64>,
    iterations: usize,
    certified: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> RfStatus {
    match e {
        Error::InvalidParameter(_) | Error::EmptyGroundSet | Error::Parse { .. } | Error::Io { .. } => {
            RfStatus::InvalidArgument
        }
        Error::TooLarge { .. } => RfStatus::TooLarge,
        Error::Orientation(_) | Error::Precondition(_) => RfStatus::Incompatible,
        Error::Internal(_) => RfStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (RfStatus, String)>) -> RfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            RfStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            RfStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (RfStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (RfStatus, String) {
    (RfStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `ptr` must point to `len` readable elements when `len > 0`.
unsafe fn slice<'a, T>(ptr: *const T, len: usize) -> Result<&'a [T], (RfStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `cap`) and returns the full message length.
///
/// # Safety
/// `buf` must be writable for `cap` bytes, or null with `cap == 0`.
#[no_mangle]
pub unsafe extern "C" fn rf_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let bytes = e.as_bytes();
        if !buf.is_null() && cap > 0 {
            let k = bytes.len().min(cap - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, k);
            *buf.add(k) = 0;
        }
        bytes.len()
    })
}

/// Builds a graph on `n` vertices from `m` edges `(us[i], vs[i])`. `ws` may
/// be null for unit weights.
///
/// # Safety
/// `us`, `vs` (and `ws` unless null) must hold `m` elements; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn rf_graph_new(
    n: usize,
    m: usize,
    us: *const usize,
    vs: *const usize,
    ws: *const f64,
    out: *mut *mut RfGraph,
) -> RfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let us = slice(us, m)?;
        let vs = slice(vs, m)?;
        let ws = if ws.is_null() { None } else { Some(slice(ws, m)?) };
        let edges = (0..m)
            .map(|i| (us[i], vs[i], ws.map_or(1.0, |w| w[i])))
            .collect();
        let g = UndirectedGraph::new(n, edges).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(RfGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from [`rf_graph_new`] and not be freed yet; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rf_graph_free(g: *mut RfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Builds a bipartite graph with `left` left vertices and right vertex
/// weights `weights[0..right]`, from `m` edges `(ls[i], rs[i])`.
///
/// # Safety
/// Arrays must hold the stated number of elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_bipartite_new(
    left: usize,
    right: usize,
    weights: *const f64,
    m: usize,
    ls: *const usize,
    rs: *const usize,
    out: *mut *mut RfBipartite,
) -> RfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let weights = slice(weights, right)?.to_vec();
        let ls = slice(ls, m)?;
        let rs = slice(rs, m)?;
        let edges = ls.iter().copied().zip(rs.iter().copied()).collect();
        let b = WeightedBipartiteGraph::new(left, weights, edges).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(RfBipartite(b)));
        Ok(())
    })
}

/// # Safety
/// `b` must come from [`rf_bipartite_new`] and not be freed yet; null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn rf_bipartite_free(b: *mut RfBipartite) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

fn config(iters: usize, eps: f64) -> Result<SolverConfig, (RfStatus, String)> {
    let cfg = SolverConfig::with_iters(iters).with_eps(eps);
    cfg.validate().map_err(lib_err)?;
    Ok(cfg)
}

fn algo_of(code: i32) -> Result<RfAlgo, (RfStatus, String)> {
    Ok(match code {
        0 => RfAlgo::SuperGreedy,
        1 => RfAlgo::FrankWolfe,
        2 => RfAlgo::FujishigeWolfe,
        3 => RfAlgo::Flow,
        4 => RfAlgo::ExactFlowBaseline,
        5 => RfAlgo::Brute,
        _ => return Err((RfStatus::InvalidArgument, format!("unknown algorithm code {code}"))),
    })
}

fn universal_algo(algo: RfAlgo) -> Option<Algorithm> {
    match algo {
        RfAlgo::SuperGreedy => Some(Algorithm::SuperGreedy),
        RfAlgo::FrankWolfe => Some(Algorithm::FrankWolfe),
        RfAlgo::FujishigeWolfe => Some(Algorithm::FujishigeWolfe),
        _ => None,
    }
}

fn engine(algo: RfAlgo) -> MaxFlowEngine {
    if algo == RfAlgo::ExactFlowBaseline {
        MaxFlowEngine::EdmondsKarp
    } else {
        MaxFlowEngine::PushRelabel
    }
}

fn densest<F: SetFunction>(
    f: &F,
    algo: RfAlgo,
    iters: usize,
    eps: f64,
    exact: impl FnOnce(MaxFlowEngine) -> ratioforge::Result<ratioforge::flow::FlowSolve>,
) -> Result<RfResult, (RfStatus, String)> {
    if let Some(a) = universal_algo(algo) {
        let out = solve(f, a, &config(iters, eps)?).map_err(lib_err)?;
        return Ok(RfResult {
            value: out.best.objective,
            set: out.best.set,
            point: out.point.into_vec(),
            iterations: out.iterations,
            certified: out.converged,
        });
    }
    let sol = match algo {
        RfAlgo::Brute => ratioforge::brute::brute_max_ratio(f).map_err(lib_err)?,
        _ => {
            let s = exact(engine(algo)).map_err(lib_err)?;
            return Ok(RfResult {
                value: s.solution.ratio,
                set: s.solution.set,
                point: Vec::new(),
                iterations: s.flow_calls,
                certified: true,
            });
        }
    };
    Ok(RfResult {
        value: sol.ratio,
        set: sol.set,
        point: Vec::new(),
        iterations: 1,
        certified: true,
    })
}

unsafe fn store(out: *mut *mut RfResult, r: RfResult) {
    *out = Box::into_raw(Box::new(r));
}

/// Densest subgraph: maximizes `|E(S)|/|S|`. `iters` and `eps` apply to the
/// iterative algorithms only.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_dsg_solve(
    g: *const RfGraph,
    algo: i32,
    iters: usize,
    eps: f64,
    out: *mut *mut RfResult,
) -> RfStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let algo = algo_of(algo)?;
        let r = densest(&dsg_oracle(&g.0), algo, iters, eps, |e| {
            flow_density_solver(&DensityInstance::dsg(&g.0), e)
        })?;
        store(out, r);
        Ok(())
    })
}

/// Heavy nodes in a small neighbourhood: maximizes `w(N̄(S))/|S|` over the
/// left side.
///
/// # Safety
/// `b` must be a live bipartite handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_hnsn_solve(
    b: *const RfBipartite,
    algo: i32,
    iters: usize,
    eps: f64,
    out: *mut *mut RfResult,
) -> RfStatus {
    guard(|| {
        let (Some(b), false) = (b.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let algo = algo_of(algo)?;
        let r = densest(&hnsn_oracle(&b.0), algo, iters, eps, |e| flow_hnsn_solver_with(&b.0, e))?;
        store(out, r);
        Ok(())
    })
}

/// Minimum-norm point of the base contrapolymatroid of `|E(.)|`. The result
/// value is `||x||^2` and the set is the densest prefix of `x`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_dsg_mnp(
    g: *const RfGraph,
    algo: i32,
    iters: usize,
    eps: f64,
    out: *mut *mut RfResult,
) -> RfStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let algo = algo_of(algo)?;
        let f = dsg_oracle(&g.0);
        let (x, iterations, certified) = match universal_algo(algo) {
            Some(a) => {
                let o = solve(&f, a, &config(iters, eps)?).map_err(lib_err)?;
                (o.point.into_vec(), o.iterations, o.converged)
            }
            None if algo == RfAlgo::Brute => (ratioforge::brute::brute_mnp(&f).map_err(lib_err)?, 1, true),
            None => {
                let d = flow_dense_decomposition(&DensityInstance::dsg(&g.0), engine(algo)).map_err(lib_err)?;
                (d.induced_vector(g.0.n()), d.blocks.len(), true)
            }
        };
        let set = best_prefix_dense(&f, &x).map_err(lib_err)?.set;
        store(
            out,
            RfResult {
                value: x.iter().map(|v| v * v).sum(),
                set,
                point: x,
                iterations,
                certified,
            },
        );
        Ok(())
    })
}

/// Maximum flow from `source` to `sink` over `m` arcs `tails[i] -> heads[i]`
/// with capacities `caps[i]`. The result value is the flow value and the set
/// is the source side of the minimal minimum cut.
///
/// # Safety
/// Arrays must hold `m` elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_maxflow(
    nodes: usize,
    source: usize,
    sink: usize,
    m: usize,
    tails: *const usize,
    heads: *const usize,
    caps: *const f64,
    algo: i32,
    out: *mut *mut RfResult,
) -> RfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let algo = algo_of(algo)?;
        if !matches!(algo, RfAlgo::Flow | RfAlgo::ExactFlowBaseline) {
            return Err((RfStatus::Incompatible, "maximum flow needs a flow algorithm".into()));
        }
        let tails = slice(tails, m)?;
        let heads = slice(heads, m)?;
        let caps = slice(caps, m)?;
        let mut fi = FlowInstance::new(nodes, source, sink).map_err(lib_err)?;
        for i in 0..m {
            fi.add_arc(tails[i], heads[i], caps[i]).map_err(lib_err)?;
        }
        let cut = engine(algo).run(&fi);
        store(
            out,
            RfResult {
                value: cut.value,
                set: (0..nodes).filter(|&v| cut.source_side[v]).collect(),
                point: Vec::new(),
                iterations: 1,
                certified: true,
            },
        );
        Ok(())
    })
}

/// # Safety
/// `r` must come from a solver call and not be freed yet; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rf_result_free(r: *mut RfResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Objective value; NaN for a null handle.
///
/// # Safety
/// `r` must be a live result handle or null.
#[no_mangle]
pub unsafe extern "C" fn rf_result_value(r: *const RfResult) -> f64 {
    r.as_ref().map_or(f64::NAN, |r| r.value)
}

/// # Safety
/// `r` must be a live result handle or null.
#[no_mangle]
pub unsafe extern "C" fn rf_result_iterations(r: *const RfResult) -> usize {
    r.as_ref().map_or(0, |r| r.iterations)
}

/// `true` when the answer is exact or met the requested gap.
///
/// # Safety
/// `r` must be a live result handle or null.
#[no_mangle]
pub unsafe extern "C" fn rf_result_certified(r: *const RfResult) -> bool {
    r.as_ref().is_some_and(|r| r.certified)
}

/// Copies up to `cap` set elements into `buf`; returns the set size.
///
/// # Safety
/// `r` must be a live result handle or null; `buf` writable for `cap`
/// elements or null.
#[no_mangle]
pub unsafe extern "C" fn rf_result_set(r: *const RfResult, buf: *mut usize, cap: usize) -> usize {
    let Some(r) = r.as_ref() else { return 0 };
    if !buf.is_null() {
        let k = r.set.len().min(cap);
        std::ptr::copy_nonoverlapping(r.set.as_ptr(), buf, k);
    }
    r.set.len()
}

/// Copies up to `cap` entries of the continuous point into `buf`; returns
/// its length (zero for exact combinatorial answers).
///
/// # Safety
/// `r` must be a live result handle or null; `buf` writable for `cap`
/// elements or null.
#[no_mangle]
pub unsafe extern "C" fn rf_result_point(r: *const RfResult, buf: *mut f64, cap: usize) -> usize {
    let Some(r) = r.as_ref() else { return 0 };
    if !buf.is_null() {
        let k = r.point.len().min(cap);
        std::ptr::copy_nonoverlapping(r.point.as_ptr(), buf, k);
    }
    r.point.len()
}
