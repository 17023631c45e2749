use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;
use num_rational::BigRational;
use qbias::bias::gf::GfEngine;
use qbias::bias::theorem1_sweep;
use qbias::bias::weights::ScaledWeights;
use qbias::qfunc::euler_product;
use qbias::Exec;

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn convolution(c: &mut Criterion) {
    let mut g = c.benchmark_group("convolution");
    for n in [500, 2000] {
        let p = euler_product(n).invert().unwrap();
        let q: qbias::Series<BigInt> = p.clone();
        for (name, exec) in POLICIES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| b.iter(|| p.mul_with(&q, exec)));
        }
    }
    g.finish();
}

fn bias_engine(c: &mut Criterion) {
    let mut g = c.benchmark_group("gf_bias");
    let n = 600;
    let w = ScaledWeights::new(&BigRational::new(3.into(), 2.into()), &BigRational::from_integer(1.into()), n);
    for (name, exec) in POLICIES {
        let engine = GfEngine::new(&w, n, exec);
        g.bench_function(name, |b| b.iter(|| engine.bias(2, 5, 7)));
    }
    g.finish();
}

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("theorem1_sweep");
    g.sample_size(10);
    for (name, exec) in POLICIES {
        g.bench_function(name, |b| b.iter(|| theorem1_sweep(5, 120, exec).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, convolution, bias_engine, sweep);
criterion_main!(benches);
