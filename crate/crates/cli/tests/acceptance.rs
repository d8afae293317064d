//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use ado_forge_core::engine::{self, EngineConfig, Method, Step};
use ado_forge_core::lie::{self, LieAlgebra};
use ado_forge_core::linalg::{self, rational::int, RationalMatrix, SparseVec, Subspace};
use ado_forge_core::{fixtures, free, graded, rep, AdoError};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS: [&str; 8] = [
    "abelian1",
    "abelian2",
    "abelian3",
    "heisenberg3",
    "heisenberg5",
    "filiform4",
    "free2_2",
    "free2_3",
];

fn corpus() -> Vec<LieAlgebra> {
    CORPUS.iter().map(|n| fixtures::by_name(n).unwrap()).collect()
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_ado-forge"))
        .args(args)
        .env_remove("ADO_FORGE_BUDGET")
        .output()
        .expect("binary runs");
    (out.status.code().expect("exit code"), out.stdout)
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn write_example(dir: &Path, name: &str) -> PathBuf {
    let (code, text) = cli(&["examples", name]);
    assert_eq!(code, 0, "examples {name}");
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, text).unwrap();
    path
}

/// Every run of `construct` on the corpus round-trips through `verify`.
fn theorem_end_to_end() -> String {
    let dir = tempfile::tempdir().unwrap();
    let mut slowest = Duration::ZERO;
    for name in CORPUS {
        let algebra = write_example(dir.path(), name);
        let rep_path = dir.path().join(format!("{name}.rep.json"));
        let start = Instant::now();
        let (code, _) = cli(&["construct", s(&algebra), "--out", s(&rep_path)]);
        let elapsed = start.elapsed();
        assert_eq!(code, 0, "construct {name}");
        assert!(elapsed < Duration::from_secs(60), "{name} took {elapsed:?}");
        slowest = slowest.max(elapsed);
        let (code, report) = cli(&["verify", s(&algebra), s(&rep_path)]);
        assert_eq!(code, 0, "verify {name}");
        let report: serde_json::Value = serde_json::from_slice(&report).unwrap();
        assert_eq!(report, serde_json::json!({"homomorphism": true, "faithful": true, "nilpotent": true}));
    }
    format!("{} algebras, slowest construct {slowest:.2?}", CORPUS.len())
}

fn graded_embedding_is_injective() -> String {
    let mut checked = 0;
    for l in corpus() {
        let (c, hom) = graded::graded_embedding(&l).unwrap();
        assert_eq!(hom.rank(), l.dim(), "{}", l.name());
        let degrees = l.grading().unwrap().degrees();
        let images = hom.matrix().columns();
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let lhs = hom.apply(&l.bracket_basis(i, j));
                let rhs = c.product.bracket(&images[i], &images[j]);
                assert_eq!(lhs, rhs);
                if (degrees[i] + degrees[j]) as usize >= c.truncation {
                    assert!(rhs.is_zero());
                }
                checked += 1;
            }
        }
    }
    format!("{checked} bracket pairs")
}

fn cocycle_extension_is_faithful_and_nilpotent() -> String {
    let mut dims = Vec::new();
    for l in corpus() {
        let (c, _) = graded::graded_embedding(&l).unwrap();
        let euler = graded::euler_derivation(&c);
        let ext = graded::cocycle_extension_rep(euler.rep(), euler.map()).unwrap();
        assert!(rep::rep_kernel(&ext).is_zero());
        assert!(rep::is_nilpotent_rep(&ext));
        assert!(rep::is_homomorphism(&ext));
        dims.push(ext.space_dim());
    }
    format!("extension dims {dims:?}")
}

fn euler_kernel_is_zero() -> String {
    let mut count = 0;
    for l in corpus() {
        for n in 2..=5 {
            let c = graded::current_algebra(&l, n);
            let euler = graded::euler_derivation(&c);
            assert!(linalg::kernel_basis(euler.map()).is_zero());
            count += 1;
        }
    }
    format!("{count} current algebras")
}

fn glue_kernels_strictly_descend() -> String {
    let cfg = EngineConfig {
        method: Method::Induction,
        ..EngineConfig::default()
    };
    let mut traces = 0;
    for l in corpus().into_iter().chain([fixtures::filiform4().without_grading()]) {
        let c = engine::construct_faithful_nilpotent(&l, &cfg).unwrap();
        for step in &c.certificate.steps {
            if let Step::Glue { kernel_dims, .. } = step {
                assert!(kernel_dims.windows(2).all(|w| w[1] < w[0]));
                assert!(kernel_dims.len() <= l.dim().max(1) + c.certificate.steps.len());
                assert_eq!(kernel_dims.last(), Some(&0));
                traces += 1;
            }
        }
    }
    // direct runs with the adjoint for non-central and graded reps for central elements
    for l in corpus() {
        let ad = rep::adjoint(&l);
        let faithful = graded::graded_faithful_rep(&l).unwrap().rep;
        let (glued, trace) = engine::glue_local(&l, |x| {
            Ok(if lie::is_central(&l, x) { faithful.clone() } else { ad.clone() })
        })
        .unwrap();
        assert!(rep::is_faithful(&glued));
        assert!(trace.kernel_dims.len() <= l.dim());
        assert!(trace.kernel_dims.windows(2).all(|w| w[1] < w[0]));
        traces += 1;
    }
    format!("{traces} traces")
}

fn ideal_closure(l: &LieAlgebra, seed: SparseVec) -> Subspace {
    let full = Subspace::full(l.dim());
    let mut ideal = Subspace::span(l.dim(), [seed]);
    loop {
        let grown = ideal.sum(&lie::bracket_subspaces(l, &full, &ideal));
        if grown == ideal {
            return ideal;
        }
        ideal = grown;
    }
}

fn random_refinements() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let algebras = corpus();
    let mut done = 0;
    while done < 20 {
        let l = &algebras[rng.gen_range(0..algebras.len())];
        let seed = SparseVec::from_dense(&(0..l.dim()).map(|_| int(rng.gen_range(-2..=2))).collect::<Vec<_>>());
        let ideal = ideal_closure(l, seed);
        if ideal.is_zero() {
            continue;
        }
        let j = lie::codim1_refinement(l, &ideal).unwrap();
        assert!(lie::is_ideal(l, &j));
        assert_eq!(j.dim() + 1, ideal.dim());
        for i in 0..l.dim() {
            for b in ideal.basis() {
                assert!(j.contains(&l.bracket(&SparseVec::unit(i), b)));
            }
        }
        done += 1;
    }
    "20 ideals".to_string()
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let mut entries = Vec::new();
    for k in 0..n * n {
        if rng.gen_bool(0.5) {
            entries.push((k / n, k % n, int(rng.gen_range(-4..=4))));
        }
    }
    RationalMatrix::from_entries(n, n, entries).unwrap()
}

fn factor_through_pairs() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let f = random_matrix(&mut rng, n);
        let m = random_matrix(&mut rng, n);
        let g = m.mul(&f).unwrap();
        let h = linalg::factor_through(&f, &g).unwrap();
        assert_eq!(h.mul(&f).unwrap(), g);
    }
    let mut violations = 0;
    while violations < 100 {
        let n = rng.gen_range(1..=6);
        // killing column c puts e_c in Ker f; g keeps a nonzero column c
        let c = rng.gen_range(0..n);
        let f = RationalMatrix::from_entries(
            n,
            n,
            random_matrix(&mut rng, n).entries().filter(|e| e.1 != c).map(|(r, k, v)| (r, k, v.clone())),
        )
        .unwrap();
        let g = random_matrix(&mut rng, n);
        if g.column(c).is_zero() {
            continue;
        }
        assert_eq!(linalg::factor_through(&f, &g), Err(AdoError::KernelNotContained));
        violations += 1;
    }
    "100 factorizations, 100 violations".to_string()
}

fn tensor_square_index() -> String {
    let std = fixtures::heisenberg3_standard();
    let sq = rep::tensor_product(&std, &std).unwrap();
    let n = linalg::nilpotency_index(std.matrix(0)).unwrap();
    assert_eq!(linalg::nilpotency_index(sq.matrix(0)).unwrap(), 2 * n - 1);

    const BUDGET: usize = 1024;
    let mut checked = 0;
    for l in corpus() {
        for method in [Method::Graded, Method::Induction] {
            let cfg = EngineConfig {
                method,
                ..EngineConfig::default()
            };
            let rho = engine::construct_faithful_nilpotent(&l, &cfg).unwrap().rep;
            if rho.space_dim() * rho.space_dim() > BUDGET {
                continue;
            }
            let sq = rep::tensor_product(&rho, &rho).unwrap();
            for i in 0..l.dim() {
                let n = linalg::nilpotency_index(rho.matrix(i)).unwrap();
                assert_eq!(linalg::nilpotency_index(sq.matrix(i)).unwrap(), 2 * n - 1);
                checked += 1;
            }
        }
    }
    format!("h3 standard plus {checked} basis actions (tensor dim <= {BUDGET})")
}

fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = rows[r][c].clone() / rows[rank][c].clone();
                let pivot_row = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= p * &factor;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim Der(L)` from the dense equations `D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]`.
fn derivation_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let c: Vec<Vec<Vec<BigRational>>> = (0..n)
        .map(|i| (0..n).map(|j| l.bracket_basis(i, j).to_dense(n)).collect())
        .collect();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![BigRational::zero(); n * n];
                for m in 0..n {
                    row[k * n + m] += c[i][j][m].clone();
                    row[m * n + i] -= c[m][j][k].clone();
                    row[m * n + j] -= c[i][m][k].clone();
                }
                rows.push(row);
            }
        }
    }
    n * n - dense_rank(rows)
}

fn oracle_cross_checks() -> String {
    for r in 1..=3 {
        for c in 1..=5 {
            let words = free::hall_basis(r, c);
            for d in 1..=c {
                assert_eq!(words.iter().filter(|w| w.degree == d).count(), free::witt_dimension(r, d));
            }
        }
    }
    let h3 = fixtures::heisenberg3();
    let f4 = fixtures::filiform4();
    let z_h3 = graded::cocycle_space(&rep::adjoint(&h3)).dim();
    let z_f4 = graded::cocycle_space(&rep::adjoint(&f4)).dim();
    assert_eq!((z_h3, derivation_dim(&h3)), (6, 6));
    assert_eq!((z_f4, derivation_dim(&f4)), (7, 7));
    for l in corpus().into_iter().chain([fixtures::solvable2(), fixtures::by_name("free3_2").unwrap()]) {
        assert_eq!(lie::center(&l), rep::rep_kernel(&rep::adjoint(&l)), "{}", l.name());
    }
    format!("Hall = Witt for r <= 3, c <= 5; Z1(h3) = {z_h3}; Z1(f4) = {z_f4}")
}

fn determinism() -> String {
    let dir = tempfile::tempdir().unwrap();
    let mut runs = 0;
    for name in CORPUS {
        let algebra = write_example(dir.path(), name);
        for method in ["graded", "induction"] {
            let mut outputs = Vec::new();
            for attempt in 0..2 {
                let rep_path = dir.path().join(format!("{name}.{method}.{attempt}.rep.json"));
                let cert_path = dir.path().join(format!("{name}.{method}.{attempt}.cert.json"));
                let (code, _) = cli(&[
                    "construct",
                    s(&algebra),
                    "--method",
                    method,
                    "--out",
                    s(&rep_path),
                    "--certificate",
                    s(&cert_path),
                ]);
                assert_eq!(code, 0);
                outputs.push((std::fs::read(&rep_path).unwrap(), std::fs::read(&cert_path).unwrap(), cert_path));
            }
            assert_eq!(outputs[0].0, outputs[1].0, "{name} {method} representation");
            assert_eq!(outputs[0].1, outputs[1].1, "{name} {method} certificate");
            let replayed = dir.path().join(format!("{name}.{method}.replay.json"));
            let (code, _) = cli(&["replay", s(&algebra), s(&outputs[0].2), "--out", s(&replayed)]);
            assert_eq!(code, 0);
            assert_eq!(std::fs::read(&replayed).unwrap(), outputs[0].0);
            runs += 1;
        }
    }
    format!("{runs} construct pairs identical and replayed")
}

type Criterion = (&'static str, fn() -> String);

fn main() {
    let criteria: [Criterion; 10] = [
        ("construct then verify succeeds on the corpus", theorem_end_to_end),
        ("graded embedding is an injective homomorphism", graded_embedding_is_injective),
        ("cocycle extension is faithful and nilpotent", cocycle_extension_is_faithful_and_nilpotent),
        ("Euler derivation has zero kernel", euler_kernel_is_zero),
        ("glue kernels strictly decrease", glue_kernels_strictly_descend),
        ("codimension-one refinement of random ideals", random_refinements),
        ("factor_through on random and violating pairs", factor_through_pairs),
        ("tensor square nilpotency index is 2n-1", tensor_square_index),
        ("oracle cross-checks", oracle_cross_checks),
        ("determinism and certificate replay", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(detail) => println!("criterion {:>2} [PRIMARY] PASS  {name} ({detail})", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} [PRIMARY] FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    let _ = panic::take_hook();
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
