use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use nijenhuis::enumerate::words_bounded;
use nijenhuis::{
    run_axiom_suite, BaseKind, EndoHandle, HopfLayer, ShuffleAlgebra, ShuffleElement, SuiteConfig,
    TensorWord,
};

fn word(exps: &[u32]) -> ShuffleElement {
    ShuffleElement::basis(TensorWord::from_exponents(exps).unwrap())
}

fn product(c: &mut Criterion) {
    let mut group = c.benchmark_group("product");
    let trivial = ShuffleAlgebra::new(BaseKind::Trivial);
    for n in [4usize, 8, 12] {
        let u = trivial.make_u(n);
        group.bench_with_input(BenchmarkId::new("u_n*u_n", n), &u, |b, u| {
            b.iter(|| trivial.mul(black_box(u), black_box(u)))
        });
    }
    let binomial = ShuffleAlgebra::new(BaseKind::Binomial);
    for len in [2usize, 3, 4] {
        let exps: Vec<u32> = (1..=len as u32).collect();
        let w = word(&exps);
        group.bench_with_input(BenchmarkId::new("binomial word^2", len), &w, |b, w| {
            b.iter(|| binomial.mul(black_box(w), black_box(w)))
        });
    }
    group.finish();
}

fn coproduct(c: &mut Criterion) {
    let mut group = c.benchmark_group("coproduct");
    let alg = ShuffleAlgebra::new(BaseKind::Binomial);
    for len in [2usize, 3, 4] {
        let exps = vec![2u32; len];
        let w = word(&exps);
        group.bench_with_input(BenchmarkId::new("binomial x^2 word", len), &w, |b, w| {
            b.iter(|| alg.coproduct(black_box(w)))
        });
    }
    group.finish();
}

fn antipode(c: &mut Criterion) {
    let mut group = c.benchmark_group("antipode");
    let alg = ShuffleAlgebra::new(BaseKind::OneSided);
    let hopf = HopfLayer::new(alg, false);
    let sum: ShuffleElement = words_bounded(BaseKind::OneSided, 3, 2)
        .into_iter()
        .map(|w| (w, nijenhuis::scalar::int(1)))
        .collect();
    group.bench_function("onesided id*S on all words len<=3", |b| {
        b.iter(|| hopf.convolve(EndoHandle::Identity, EndoHandle::Antipode, black_box(&sum)))
    });
    let exploratory = HopfLayer::new(ShuffleAlgebra::new(BaseKind::Binomial), true);
    let w = word(&[1, 1, 1]);
    group.bench_function("binomial S(x|x|x) exploratory", |b| {
        b.iter(|| exploratory.antipode(black_box(&w)))
    });
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for base in [BaseKind::Trivial, BaseKind::OneSided] {
        let cfg = SuiteConfig {
            base,
            trials: 10,
            ..SuiteConfig::default()
        };
        group.bench_function(base.name(), |b| b.iter(|| run_axiom_suite(black_box(&cfg))));
    }
    group.finish();
}

criterion_group!(benches, product, coproduct, antipode, suite);
criterion_main!(benches);
