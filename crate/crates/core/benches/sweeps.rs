use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cusp_core::classical::{sweep_shapes, Level, TorusKind};
use cusp_core::par::Exec;
use cusp_core::rootdata::{build_root_datum, Isogeny};
use cusp_core::toruschar::{sweep_classes, SearchOptions};
use cusp_core::weyl::{enumerate_weyl, twisted_centralizer, twisted_classes};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn centralizers(c: &mut Criterion) {
    let rd = build_root_datum("F4".parse().unwrap(), Isogeny::SimplyConnected).unwrap();
    let w = enumerate_weyl(&rd).unwrap();
    let classes = twisted_classes(&w).unwrap();
    let mut group = c.benchmark_group("twisted_centralizer/F4");
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| classes.iter().filter(|c| c.elliptic).map(|c| twisted_centralizer(&w, &c.omega, exec).order()).sum::<usize>())
        });
    }
    group.finish();
}

fn weyl_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_classes");
    group.sample_size(10);
    for (label, q) in [("B4", 5u64), ("2A4", 4)] {
        let rd = build_root_datum(label.parse().unwrap(), Isogeny::SimplyConnected).unwrap();
        let w = enumerate_weyl(&rd).unwrap();
        let classes = twisted_classes(&w).unwrap();
        for (name, exec) in STRATEGIES {
            let opts = SearchOptions { exec, ..SearchOptions::default() };
            group.bench_function(BenchmarkId::new(format!("{label}({q})"), name), |b| b.iter(|| sweep_classes(&w, &classes, q, opts).unwrap()));
        }
    }
    group.finish();
}

fn product_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_shapes/SU(5)");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        // q = 3 has no witness, so every shape is searched exhaustively
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| sweep_shapes(TorusKind::Unitary, 5, 3, Level::Su, true, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, centralizers, weyl_sweeps, product_sweeps);
criterion_main!(benches);
