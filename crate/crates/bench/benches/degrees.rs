use a1deg_core::{
    duplicant, gw_add, gw_equal, sample, unstable_degree, verify_local_to_global, Field, FieldElement, RootDatum,
};
use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

const Q: Field = Field::Rationals;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xBE4C)
}

fn roots_with_total(total: usize) -> Vec<RootDatum> {
    // Shapes like [1, 2, 3, ...] truncated to the requested total.
    let mut out = Vec::new();
    let mut left = total;
    let mut e = 1;
    let mut r = 0i64;
    while left > 0 {
        let m = e.min(left);
        out.push(RootDatum::new(FieldElement::from_i64(Q, r), m).unwrap());
        left -= m;
        e += 1;
        r = if r <= 0 { 1 - r } else { -r };
    }
    out
}

fn bench_duplicant(c: &mut Criterion) {
    let mut group = c.benchmark_group("duplicant");
    let one = FieldElement::one(Q);
    for total in [3, 6, 10] {
        let roots = roots_with_total(total);
        group.bench_with_input(BenchmarkId::from_parameter(total), &roots, |b, roots| {
            b.iter(|| duplicant(black_box(roots), &one).unwrap())
        });
    }
    group.finish();
}

fn bench_unstable_degree(c: &mut Criterion) {
    let mut group = c.benchmark_group("unstable_degree");
    for field in [Q, Field::Prime(101)] {
        let mut rng = rng();
        group.bench_function(field.to_string(), |b| {
            b.iter_batched(
                || sample::pointed(&mut rng, field, 8),
                |f| unstable_degree(&f).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_local_to_global(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_local_to_global");
    for field in [Q, Field::Prime(101)] {
        let mut rng = rng();
        group.bench_function(field.to_string(), |b| {
            b.iter_batched(
                || sample::split_instance(&mut rng, field, 8, 4),
                |f| verify_local_to_global(&f).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_gw_equal(c: &mut Criterion) {
    let mut rng = rng();
    c.bench_function("gw_equal/Q rank 8", |b| {
        b.iter_batched(
            || {
                let a = unstable_degree(&sample::pointed(&mut rng, Q, 4)).unwrap();
                let b = unstable_degree(&sample::pointed(&mut rng, Q, 4)).unwrap();
                (gw_add(&a, &b).unwrap(), gw_add(&b, &a).unwrap())
            },
            |(x, y)| gw_equal(&x, &y).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_duplicant,
    bench_unstable_degree,
    bench_local_to_global,
    bench_gw_equal
);
criterion_main!(benches);
