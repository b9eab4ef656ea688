use criterion::{black_box, criterion_group, criterion_main, Criterion};

use matroid_csm::{csm_cycle, degree, is_balanced, stable_intersect, standard_hyperplane, Matroid};

fn bench_csm_construction(c: &mut Criterion) {
    let m = Matroid::uniform(3, 6).unwrap();
    c.bench_function("csm_cycle U(3,6) k=1", |b| {
        b.iter(|| csm_cycle(black_box(&m), 1).unwrap())
    });
}

fn bench_balancing(c: &mut Criterion) {
    let m = Matroid::uniform(3, 6).unwrap();
    let z = csm_cycle(&m, 2).unwrap();
    c.bench_function("is_balanced csm_2 U(3,6)", |b| {
        b.iter(|| is_balanced(black_box(&z)))
    });
}

fn bench_stable_intersection(c: &mut Criterion) {
    let plane = csm_cycle(&Matroid::uniform(3, 5).unwrap(), 2).unwrap();
    let h = standard_hyperplane(5).unwrap();
    c.bench_function("stable_intersect B(U(3,5)) . H", |b| {
        b.iter(|| stable_intersect(black_box(&plane), black_box(&h)).unwrap())
    });
}

fn bench_degree(c: &mut Criterion) {
    let m = Matroid::uniform(4, 6).unwrap();
    let z = csm_cycle(&m, 2).unwrap();
    c.bench_function("degree csm_2 U(4,6)", |b| {
        b.iter(|| degree(black_box(&z)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_csm_construction,
    bench_balancing,
    bench_stable_intersection,
    bench_degree
);
criterion_main!(benches);
