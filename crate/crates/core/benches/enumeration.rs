use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qtlink::catalog;
use qtlink::coloring::count_colorings_with;
use qtlink::exec::Exec;
use qtlink::homology::{DegeneracyMode, QuandleComplex};
use qtlink::invariant::{cocycle_invariant, refined_invariant, InvariantMode};

fn execs() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn enumeration(c: &mut Criterion) {
    let q = catalog::get_quandle("inoue12").unwrap();
    let theta = catalog::get_cochain("inoue12_theta").unwrap();
    let mut group = c.benchmark_group("borromean_inoue12");
    for name in ["borromean", "unlink3"] {
        let d = catalog::get_diagram(name).unwrap();
        for (label, exec) in execs() {
            group.bench_with_input(BenchmarkId::new(format!("count/{label}"), name), &d, |b, d| {
                b.iter(|| count_colorings_with(black_box(d), &q, exec))
            });
            group.bench_with_input(BenchmarkId::new(format!("invariant/{label}"), name), &d, |b, d| {
                b.iter(|| cocycle_invariant(black_box(d), &q, &theta, InvariantMode::LinkHomotopy, exec).unwrap())
            });
            group.bench_with_input(BenchmarkId::new(format!("refined/{label}"), name), &d, |b, d| {
                b.iter(|| refined_invariant(black_box(d), &q, &theta, InvariantMode::LinkHomotopy, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let q = catalog::get_quandle("inoue12").unwrap();
    let mut group = c.benchmark_group("h2_inoue12");
    group.sample_size(10);
    for (label, exec) in execs() {
        let cx = QuandleComplex::new(&q, DegeneracyMode::QuasiTrivial).unwrap().with_exec(exec);
        for m in [2u64, 0] {
            group.bench_with_input(BenchmarkId::new(label, m), &m, |b, &m| b.iter(|| cx.cohomology_h2(m).unwrap()));
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration, cohomology);
criterion_main!(benches);
