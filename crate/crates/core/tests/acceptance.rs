//! Acceptance suite. Runs every criterion in order and prints one
//! `PASS`/`FAIL` line each; the process fails if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

use common::*;
use ratioforge::brute::{brute_densest, brute_max_ratio, brute_min_f, brute_min_ratio, brute_mnp, brute_subproblem};
use ratioforge::cli::args::Problem;
use ratioforge::cli::{execute, RunSpec};
use ratioforge::extract::{
    best_prefix_dense, best_prefix_sparse, dense_decomposition, dinkelbach, membership_decide, sfm_extract,
    MembershipAnswer, MembershipMethod,
};
use ratioforge::flow::{
    edmonds_karp, flow_anchored_solver, flow_dense_decomposition, flow_dsg_solver, flow_hnsn_solver, push_relabel,
    DensityInstance, FlowInstance, MaxFlowEngine,
};
use ratioforge::problems::{
    anchored_oracle, dsg_oracle, hnsn_oracle, membership_oracle, mincut_oracle, perturb_membership, pmean_oracle,
    AnchorSet, UndirectedGraph,
};
use ratioforge::setfn::{negate, Orientation, SetFunction, SolverConfig};
use ratioforge::universal::{fujishige_wolfe, solve, Algorithm};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rel_eq(a: f64, b: f64, exact: bool) -> bool {
    if exact {
        a == b
    } else {
        (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
    }
}

/// Sizes 2..=12 and both edge probabilities, cycled over `count` seeds.
fn er_suite(count: u64) -> impl Iterator<Item = (usize, f64, u64)> {
    (0..count).map(|s| (2 + (s as usize % 11), if s % 2 == 0 { 0.2 } else { 0.5 }, s))
}

struct DinkelbachStats {
    runs: usize,
    max_calls: usize,
    over_five: usize,
}

impl DinkelbachStats {
    fn note(&mut self, calls: usize, n: usize) -> Result<(), String> {
        self.runs += 1;
        self.max_calls = self.max_calls.max(calls);
        if calls > 5 {
            self.over_five += 1;
        }
        ensure!(calls <= n + 1, "{calls} density-improvement rounds on n = {n}");
        Ok(())
    }
}

fn brute_force_equivalence(stats: &mut DinkelbachStats) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (n, p, seed) in er_suite(220) {
        for weighted in [false, true] {
            let g = if weighted { gnp_weighted(n, p, seed) } else { gnp(n, p, seed) };
            let f = dsg_oracle(&g);
            let want = brute_max_ratio(&f).map_err(|e| e.to_string())?;
            let flow = flow_dsg_solver(&g).map_err(|e| e.to_string())?;
            ensure!(
                rel_eq(flow.solution.ratio, want.ratio, !weighted),
                "flow dsg n={n} p={p} seed={seed} weighted={weighted}: {} vs {}",
                flow.solution.ratio,
                want.ratio
            );
            stats.note(flow.flow_calls, n)?;
            let run = dinkelbach(&f, brute_subproblem(&f)).map_err(|e| e.to_string())?;
            ensure!(
                rel_eq(run.solution.ratio, want.ratio, !weighted),
                "dinkelbach dsg n={n} seed={seed}: {} vs {}",
                run.solution.ratio,
                want.ratio
            );
            stats.note(run.calls, n)?;
            checked += 2;
        }

        let anchor_members: Vec<usize> = (0..n).filter(|v| (v + seed as usize) % 3 != 0).collect();
        let anchor = AnchorSet::new(n, &anchor_members).unwrap();
        let g = gnp(n, p, seed);
        let f = anchored_oracle(&g, anchor.clone());
        let want = brute_max_ratio(&f).map_err(|e| e.to_string())?;
        let flow = flow_anchored_solver(&g, &anchor, MaxFlowEngine::PushRelabel).map_err(|e| e.to_string())?;
        ensure!(flow.solution.ratio == want.ratio, "flow anchored n={n} seed={seed}: {} vs {}", flow.solution.ratio, want.ratio);
        stats.note(flow.flow_calls, n)?;
        let run = dinkelbach(&f, brute_subproblem(&f)).map_err(|e| e.to_string())?;
        ensure!(run.solution.ratio == want.ratio, "dinkelbach anchored n={n} seed={seed}");
        stats.note(run.calls, n)?;

        let pm = pmean_oracle(&g, 2.0).unwrap();
        let want = brute_max_ratio(&pm).map_err(|e| e.to_string())?;
        let run = dinkelbach(&pm, brute_subproblem(&pm)).map_err(|e| e.to_string())?;
        ensure!(run.solution.ratio == want.ratio, "dinkelbach pmean n={n} seed={seed}");
        stats.note(run.calls, n)?;
        checked += 3;
    }
    for seed in 0..220u64 {
        let left = 1 + (seed as usize % 10);
        let right = 1 + (seed as usize * 7 % 12);
        let b = bipartite(left, right, seed);
        let f = hnsn_oracle(&b);
        let want = brute_max_ratio(&f).map_err(|e| e.to_string())?;
        let flow = flow_hnsn_solver(&b).map_err(|e| e.to_string())?;
        ensure!(flow.solution.ratio == want.ratio, "flow hnsn |L|={left} seed={seed}: {} vs {}", flow.solution.ratio, want.ratio);
        stats.note(flow.flow_calls, left)?;
        let run = dinkelbach(&f, brute_subproblem(&f)).map_err(|e| e.to_string())?;
        ensure!(run.solution.ratio == want.ratio, "dinkelbach hnsn |L|={left} seed={seed}");
        stats.note(run.calls, left)?;
        checked += 2;
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {:.1} s", elapsed.as_secs_f64());
    Ok(format!("{checked} solver/instance pairs exact, {:.2} s", elapsed.as_secs_f64()))
}

fn gap_transfer() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    let mut worst_iters = 0;
    for eps in [0.1, 0.01] {
        let cfg = SolverConfig {
            max_iters: 5_000_000,
            ..SolverConfig::default().with_eps(eps)
        };
        for seed in 0..6u64 {
            let n = 6 + seed as usize % 5;
            let g = gnp(n, 0.5, 100 + seed);
            let b = bipartite(n, n + 2, 100 + seed);
            let anchor = AnchorSet::new(n, &[0, 1, 2]).unwrap();
            let dense: Vec<(&str, Box<dyn SetFunction + '_>)> = vec![
                ("dsg", Box::new(dsg_oracle(&g))),
                ("hnsn", Box::new(hnsn_oracle(&b))),
                ("anchored", Box::new(anchored_oracle(&g, anchor))),
            ];
            let fi = network(n + 2, 0.4, 100 + seed, seed % 2 == 0);
            let cut = mincut_oracle(&fi).unwrap();
            let sparse: Vec<(&str, Box<dyn SetFunction + '_>)> = vec![
                ("-dsg", Box::new(negate(dsg_oracle(&g)))),
                ("-hnsn", Box::new(negate(hnsn_oracle(&b)))),
                ("cut", Box::new(mincut_oracle(&fi).unwrap())),
            ];
            for algo in Algorithm::ALL {
                for (name, f) in &dense {
                    let star = brute_max_ratio(&**f).unwrap().ratio;
                    let out = solve(&**f, algo, &cfg).unwrap();
                    ensure!(out.converged, "{algo:?} on {name} seed {seed}: gap {} > eps^2", out.gap);
                    worst_iters = worst_iters.max(out.iterations);
                    let got = best_prefix_dense(&**f, out.point.x()).unwrap().ratio;
                    ensure!(got >= star - 2.0 * eps - 1e-9, "{algo:?} {name} seed {seed} eps {eps}: dense {got} < {star} - 2eps");
                    checks += 1;
                }
                for (name, f) in &sparse {
                    let star = brute_min_ratio(&**f).unwrap().ratio;
                    let out = solve(&**f, algo, &cfg).unwrap();
                    ensure!(out.converged, "{algo:?} on {name} seed {seed}: gap {} > eps^2", out.gap);
                    worst_iters = worst_iters.max(out.iterations);
                    let got = best_prefix_sparse(&**f, out.point.x()).unwrap().ratio;
                    ensure!(got <= star + 2.0 * eps + 1e-9, "{algo:?} {name} seed {seed} eps {eps}: sparse {got} > {star} + 2eps");
                    checks += 1;
                }
                let min = brute_min_f(&cut).unwrap().value;
                let out = solve(&cut, algo, &cfg).unwrap();
                ensure!(out.converged, "{algo:?} on cut seed {seed}: gap {}", out.gap);
                let got = sfm_extract(&cut, out.point.x()).unwrap().f_value;
                let slack = 2.0 * cut.len() as f64 * eps;
                ensure!(got <= min + slack + 1e-9, "{algo:?} sfm seed {seed} eps {eps}: {got} > {min} + {slack}");
                checks += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {:.1} s", elapsed.as_secs_f64());
    Ok(format!(
        "{checks} bounds hold, max {worst_iters} iterations, {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn decomposition_point(f: &dyn SetFunction) -> Vec<f64> {
    dense_decomposition(f, brute_densest).unwrap().induced_vector(f.len())
}

fn mnp_agreement() -> Outcome {
    let cfg = SolverConfig::with_iters(10_000);
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut check = |name: &str, f: &dyn SetFunction, flow: Option<Vec<f64>>| -> Result<(), String> {
        let wolfe = fujishige_wolfe(f, &cfg).map_err(|e| e.to_string())?.point.into_vec();
        let qp = brute_mnp(f).map_err(|e| e.to_string())?;
        let dec = decomposition_point(f);
        let mut pairs = vec![("wolfe/qp", inf_norm(&wolfe, &qp)), ("wolfe/dec", inf_norm(&wolfe, &dec)), ("qp/dec", inf_norm(&qp, &dec))];
        if let Some(x) = flow {
            pairs.push(("flow/dec", inf_norm(&x, &dec)));
        }
        for (which, d) in pairs {
            worst = worst.max(d);
            ensure!(d <= 1e-6, "{name}: {which} differ by {d}");
        }
        count += 1;
        Ok(())
    };
    for seed in 0..40u64 {
        let n = 2 + seed as usize % 9;
        let p = if seed % 2 == 0 { 0.3 } else { 0.6 };
        let g = gnp(n, p, 300 + seed);
        let flow = flow_dense_decomposition(&DensityInstance::dsg(&g), MaxFlowEngine::PushRelabel)
            .unwrap()
            .induced_vector(n);
        check(&format!("dsg seed {seed}"), &dsg_oracle(&g), Some(flow))?;
        let gw = gnp_weighted(n, p, 300 + seed);
        check(&format!("weighted dsg seed {seed}"), &dsg_oracle(&gw), None)?;
        let b = bipartite(n, n + 3, 300 + seed);
        check(&format!("hnsn seed {seed}"), &hnsn_oracle(&b), None)?;
        check(&format!("-dsg seed {seed}"), &negate(dsg_oracle(&g)), None)?;
        let fi = network(n + 2, 0.4, 300 + seed, true);
        check(&format!("cut seed {seed}"), &mincut_oracle(&fi).unwrap(), None)?;
    }
    for n in 2..=10 {
        let k = clique(n);
        let f = dsg_oracle(&k);
        let uniform = vec![(n as f64 - 1.0) / 2.0; n];
        let wolfe = fujishige_wolfe(&f, &cfg).unwrap().point.into_vec();
        let qp = brute_mnp(&f).unwrap();
        let dec = decomposition_point(&f);
        ensure!(wolfe == uniform, "K{n}: wolfe {wolfe:?}");
        ensure!(qp == uniform, "K{n}: qp {qp:?}");
        ensure!(dec == uniform, "K{n}: decomposition {dec:?}");
    }
    Ok(format!("{count} instances, max pairwise gap {worst:.1e}; K2..K10 uniform exactly"))
}

fn threshold_sets() -> Outcome {
    let mut instances = 0;
    let mut lambdas = 0;
    let mut run = |name: String, f: &dyn SetFunction, r: &mut rand_chacha::ChaCha8Rng| -> Result<(), String> {
        use rand::Rng;
        let n = f.len();
        let x = brute_mnp(f).map_err(|e| e.to_string())?;
        let sub = f.orientation() == Orientation::Submodular;
        let lo = x.iter().cloned().fold(f64::INFINITY, f64::min) - 1.0;
        let hi = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 1.0;
        let values: Vec<(Vec<bool>, f64)> = all_masks(n).map(|m| {
            let v = f.value(&m);
            (m, v)
        }).collect();
        for _ in 0..20 {
            let lambda = r.gen_range(lo..hi);
            // submodular: {x <= λ} minimizes f - λ|S|; supermodular: {x >= λ} maximizes it
            let set: Vec<usize> = (0..n).filter(|&v| if sub { x[v] <= lambda } else { x[v] >= lambda }).collect();
            let obj = |fv: f64, k: usize| fv - lambda * k as f64;
            let mine = obj(value_of(f, &set), set.len());
            let tol = 1e-9 * (1.0 + mine.abs());
            for (m, fv) in &values {
                let other = obj(*fv, m.iter().filter(|&&b| b).count());
                if sub {
                    ensure!(mine <= other + tol, "{name} λ={lambda}: threshold {mine} > {other}");
                } else {
                    ensure!(mine >= other - tol, "{name} λ={lambda}: threshold {mine} < {other}");
                }
            }
            lambdas += 1;
        }
        instances += 1;
        Ok(())
    };
    let mut r = rng(4242);
    for seed in 0..30u64 {
        let n = 2 + seed as usize % 9;
        let g = gnp(n, if seed % 2 == 0 { 0.3 } else { 0.6 }, 400 + seed);
        run(format!("-dsg seed {seed}"), &negate(dsg_oracle(&g)), &mut r)?;
        run(format!("dsg seed {seed}"), &dsg_oracle(&g), &mut r)?;
        let fi = network(n + 2, 0.4, 400 + seed, seed % 2 == 1);
        run(format!("cut seed {seed}"), &mincut_oracle(&fi).unwrap(), &mut r)?;
        let b = bipartite(n, n + 2, 400 + seed);
        run(format!("-hnsn seed {seed}"), &negate(hnsn_oracle(&b)), &mut r)?;
    }
    // worked example: -|E(.)| on K3 has x* = (-1, -1, -1); at λ = -1 the threshold set is V
    let k3 = clique(3);
    let f = negate(dsg_oracle(&k3));
    let x = brute_mnp(&f).unwrap();
    ensure!(x == vec![-1.0; 3], "K3 mnp {x:?}");
    // f(V) - λ|V| = -3 + 3 = 0, and no subset does better
    let best = all_masks(3).map(|m| f.value(&m) + m.iter().filter(|&&b| b).count() as f64).fold(f64::INFINITY, f64::min);
    ensure!(value_of(&f, &[0, 1, 2]) + 3.0 == best, "K3 example: V is not a minimizer at λ = -1");
    Ok(format!("{instances} instances x 20 λ ({lambdas} checks), exhaustive"))
}

fn flow_correctness() -> Outcome {
    let check_cut = |fi: &FlowInstance, r: &ratioforge::flow::CutResult, what: &str| -> Result<(), String> {
        let cap = fi.cut_capacity(&r.source_side);
        ensure!(r.source_side[fi.source()] && !r.source_side[fi.sink()], "{what}: cut does not separate");
        ensure!((cap - r.value).abs() <= 1e-9 * (1.0 + cap), "{what}: flow {} vs cut {cap}", r.value);
        Ok(())
    };
    let mut enumerated = 0;
    for seed in 0..200u64 {
        let n = 2 + seed as usize % 49;
        let p = [0.1, 0.3, 0.6][seed as usize % 3];
        let fi = network(n, p, 500 + seed, seed % 2 == 0);
        let pr = push_relabel(&fi);
        let ek = edmonds_karp(&fi);
        ensure!(pr.value == ek.value, "n={n} seed={seed}: push-relabel {} vs Edmonds-Karp {}", pr.value, ek.value);
        check_cut(&fi, &pr, "push-relabel")?;
        check_cut(&fi, &ek, "edmonds-karp")?;
        if n <= 12 {
            let best = enumerate_min_cut(&fi);
            ensure!(pr.value == best, "n={n} seed={seed}: flow {} vs enumeration {best}", pr.value);
            enumerated += 1;
        }
    }
    for seed in 0..200u64 {
        let n = 2 + seed as usize % 11;
        let fi = network(n, 0.5, 600 + seed, false);
        let pr = push_relabel(&fi);
        ensure!(pr.value == enumerate_min_cut(&fi), "small n={n} seed={seed}");
        ensure!(pr.value == edmonds_karp(&fi).value, "small n={n} seed={seed}: engines differ");
        check_cut(&fi, &pr, "push-relabel")?;
        enumerated += 1;
    }
    Ok(format!("400 networks, engines agree, {enumerated} checked against cut enumeration"))
}

fn mincut_supergreedy() -> Outcome {
    let cfg = SolverConfig::with_iters(500);
    let mut exact = 0;
    let mut worst_ratio: f64 = 1.0;
    let mut slowest = Duration::ZERO;
    let total = 50;
    for seed in 0..total as u64 {
        let n = 20 + (seed as usize * 37) % 181;
        let m = (n * (2 + seed as usize % 9)).min(2000).min(n * (n - 1) / 2);
        let fi = unit_network(n, m, 700 + seed);
        let reference = edmonds_karp(&fi).value;
        let start = Instant::now();
        let g = mincut_oracle(&fi).unwrap();
        let out = solve(&g, Algorithm::SuperGreedy, &cfg).unwrap();
        let extracted = sfm_extract(&g, out.point.x()).unwrap().f_value;
        let cut = out.best.f_value.min(extracted) + g.source_cut();
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure!(elapsed < Duration::from_secs(10), "seed {seed}: {:.1} s", elapsed.as_secs_f64());
        ensure!(cut >= reference - 1e-9, "seed {seed}: cut {cut} below max flow {reference}");
        let ratio = if reference > 0.0 { cut / reference } else if cut == 0.0 { 1.0 } else { f64::INFINITY };
        worst_ratio = worst_ratio.max(ratio);
        if cut == reference {
            exact += 1;
        }
    }
    ensure!(worst_ratio <= 1.001, "worst ratio {worst_ratio}");
    ensure!(exact * 10 >= total * 9, "exact on {exact}/{total}");
    Ok(format!(
        "exact on {exact}/{total}, worst ratio {worst_ratio:.6}, slowest {:.3} s",
        slowest.as_secs_f64()
    ))
}

fn dinkelbach_bound(stats: &DinkelbachStats) -> Outcome {
    ensure!(stats.runs > 0, "no runs recorded");
    Ok(format!(
        "{} runs, all <= n+1, max {} rounds; {} runs above 5 rounds (reported only)",
        stats.runs, stats.max_calls, stats.over_five
    ))
}

fn ladder_graphs() -> Vec<(String, UndirectedGraph)> {
    let mut gs = vec![("triangle+pendant".to_string(), clique_with_tail(3, 1))];
    for (k, t) in [(3, 2), (4, 1), (4, 3), (5, 2), (6, 4)] {
        gs.push((format!("K{k}+{t}-path"), clique_with_tail(k, t)));
    }
    gs
}

fn membership_ladder() -> Outcome {
    let ladder = [0.1, 1.0, 6.0, 12.0];
    let cfg = SolverConfig::with_iters(20_000);
    let mut rows = Vec::new();
    for (name, g) in ladder_graphs() {
        for algo in Algorithm::ALL {
            let mut iters = Vec::new();
            for eps in ladder {
                let p = perturb_membership(&g, eps).map_err(|e| e.to_string())?;
                let h = membership_oracle(&p.instance);
                for exact in [MembershipMethod::Flow(MaxFlowEngine::PushRelabel), MembershipMethod::Brute] {
                    let a = membership_decide(&h, &exact).unwrap();
                    ensure!(a.is_no(), "{name} eps {eps}: {exact:?} says {a:?}");
                }
                let method = MembershipMethod::Universal { algo, cfg: cfg.clone() };
                match membership_decide(&h, &method).unwrap() {
                    MembershipAnswer::No { iteration: Some(k), .. } => iters.push(k),
                    other => return Err(format!("{name} eps {eps} {algo:?}: {other:?}")),
                }
            }
            ensure!(iters.windows(2).all(|w| w[1] <= w[0]), "{name} {algo:?}: detection iterations {iters:?} increase");
            rows.push(format!("{name}/{algo:?} {iters:?}"));
        }
    }
    Ok(format!("{} graph/solver ladders non-increasing; e.g. {}", rows.len(), rows[0]))
}

fn data(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let y = dir.path().join("y.txt");
    let g = ratioforge::problems::io::read_edge_list(&data("triangle_pendant.txt")).unwrap();
    let p = perturb_membership(&g, 1.0).unwrap();
    std::fs::write(&y, ratioforge::problems::io::write_vector(&p.instance.y)).unwrap();
    let problems: Vec<(Problem, &str)> = vec![
        (Problem::Dsg, "k5k3.txt"),
        (Problem::Pmean, "k5k3.txt"),
        (Problem::Hnsn, "toy.bip"),
        (Problem::Anchored, "triangle_pendant.txt"),
        (Problem::Mincut, "diamond.dimacs"),
        (Problem::Membership, "triangle_pendant.txt"),
        (Problem::Mnp, "k5k3.txt"),
    ];
    let mut runs = 0;
    for (problem, file) in problems {
        for &algo in problem.valid_algos() {
            let mut spec = RunSpec::new(problem, algo, data(file));
            spec.iters = 300;
            spec.logical_clock = true;
            spec.p = Some(2.0);
            spec.anchors = Some(data("anchors.txt"));
            spec.y = Some(y.clone());
            let a = execute(&spec).map_err(|e| format!("{problem:?}/{algo:?}: {}", e.message))?;
            let b = execute(&spec).map_err(|e| e.message)?;
            ensure!(a.trace.to_csv() == b.trace.to_csv(), "{problem:?}/{algo:?}: traces differ");
            ensure!(a.summary_line() == b.summary_line(), "{problem:?}/{algo:?}: summaries differ");
            runs += 1;
        }
    }
    let suite = dir.path().join("suite.toml");
    let mut text = String::new();
    for algo in ["supergreedy", "fw", "mnp", "flow"] {
        text += &format!(
            "[[run]]\nproblem = \"dsg\"\nalgo = \"{algo}\"\ninput = {:?}\nlogical_clock = true\n\n",
            data("k5k3.txt")
        );
    }
    std::fs::write(&suite, text).unwrap();
    let read_dir = |d: &Path| -> Vec<(String, Vec<u8>)> {
        let mut files: Vec<_> = std::fs::read_dir(d)
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
            })
            .collect();
        files.sort();
        files
    };
    let (o1, o2) = (dir.path().join("o1"), dir.path().join("o2"));
    ratioforge::cli::bench::bench(&suite, &o1, false).map_err(|e| e.message)?;
    ratioforge::cli::bench::bench(&suite, &o2, false).map_err(|e| e.message)?;
    ensure!(read_dir(&o1) == read_dir(&o2), "bench outputs differ");
    Ok(format!("{runs} run specs and one bench suite bit-identical across repeats"))
}

fn main() {
    let mut stats = DinkelbachStats {
        runs: 0,
        max_calls: 0,
        over_five: 0,
    };
    let mut failed = 0;
    let mut report = |name: &str, r: std::thread::Result<Outcome>| {
        let line = match r {
            Ok(Ok(detail)) => format!("PASS  {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                format!("FAIL  {name}: {why}")
            }
            Err(_) => {
                failed += 1;
                format!("FAIL  {name}: panicked")
            }
        };
        println!("{line}");
    };
    report("brute-force equivalence", catch_unwind(AssertUnwindSafe(|| brute_force_equivalence(&mut stats))));
    report("approximation transfer from the duality gap", catch_unwind(gap_transfer));
    report("minimum-norm-point agreement", catch_unwind(mnp_agreement));
    report("threshold sets are minimizers", catch_unwind(threshold_sets));
    report("max-flow correctness", catch_unwind(flow_correctness));
    report("min s-t cut via SuperGreedy++", catch_unwind(mincut_supergreedy));
    report("density-improvement round bound", catch_unwind(AssertUnwindSafe(|| dinkelbach_bound(&stats))));
    report("membership perturbation ladder", catch_unwind(membership_ladder));
    report("determinism", catch_unwind(determinism));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
