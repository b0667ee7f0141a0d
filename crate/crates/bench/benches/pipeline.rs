use criterion::{black_box, criterion_group, criterion_main, Criterion};
use mordell_bench::{example_curve, nine_component_fibre};
use mordell_core::{cap_cos_lower, enumerate_points, phi_p, solve_exact, Rational, RationalMatrix};

fn bench_phi_p(c: &mut Criterion) {
    let fibre = nine_component_fibre();
    c.bench_function("phi_p nine-component fibre", |b| {
        b.iter(|| phi_p(black_box(&fibre), 2).unwrap())
    });
}

fn bench_solve(c: &mut Criterion) {
    // A dense 20x20 system with a known solution.
    let n = 20usize;
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = if i == j {
                        (i + 2) as i64
                    } else {
                        ((i * 7 + j * 3) % 5) as i64
                    };
                    Rational::from_integer(v.into())
                })
                .collect()
        })
        .collect();
    let matrix = RationalMatrix::from_rows(&rows).unwrap();
    let x: Vec<Rational> = (0..n)
        .map(|i| Rational::new((i as i64 - 9).into(), (i as i64 + 1).into()))
        .collect();
    let b = matrix.mul_vector(&x).unwrap();
    c.bench_function("solve_exact 20x20", |bch| {
        bch.iter(|| solve_exact(black_box(&matrix), black_box(&b)).unwrap())
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let curve = example_curve();
    c.bench_function("enumerate_points B=200", |b| {
        b.iter(|| enumerate_points(black_box(&curve), 200))
    });
}

fn bench_cap_bound(c: &mut Criterion) {
    c.bench_function("cap_cos_lower r=8 n=24", |b| {
        b.iter(|| cap_cos_lower(black_box(8), black_box(24)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_phi_p,
    bench_solve,
    bench_enumerate,
    bench_cap_bound
);
criterion_main!(benches);
