use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hecke_core::rational::rat;
use hecke_core::{build_m, build_n, burnside_irreducible, AlgebraContext, FullCharacter};

fn multiply(c: &mut Criterion) {
    for n in [2usize, 3] {
        let ctx = AlgebraContext::new(n, rat(1)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        c.bench_function(&format!("multiply n={n}"), |b| {
            b.iter_batched(
                || (ctx.random_element(&mut rng, 2, 3), ctx.random_element(&mut rng, 2, 3)),
                |(x, y)| ctx.multiply(&x, &y).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
}

fn modules(c: &mut Criterion) {
    for n in [3usize, 4] {
        let ctx = AlgebraContext::new(n, rat(1)).unwrap();
        let gamma = (0..n as i64).map(|j| rat(3 * j + 1)).collect();
        let chi = FullCharacter::new(gamma, "+".repeat(n).parse().unwrap()).unwrap();
        c.bench_function(&format!("build_m n={n}"), |b| b.iter(|| build_m(&chi, &ctx).unwrap()));
        let m = build_m(&chi, &ctx).unwrap();
        c.bench_function(&format!("burnside simple n={n}"), |b| b.iter(|| burnside_irreducible(&m)));
    }
    let ctx = AlgebraContext::new(4, rat(1)).unwrap();
    let chi = FullCharacter::new([5, 1, 5, 1].map(rat).to_vec(), "++--".parse().unwrap()).unwrap();
    let m = build_n(&chi, &ctx).unwrap();
    let mut g = c.benchmark_group("burnside reducible");
    g.sample_size(10);
    g.bench_function("type D n=4", |b| b.iter(|| burnside_irreducible(&m)));
    g.finish();
}

criterion_group!(benches, multiply, modules);
criterion_main!(benches);
