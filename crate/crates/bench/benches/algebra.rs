use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncsym::lattice::{clear_mobius_cache, mobius, mobius_product_form, mobius_uncached};
use ncsym::realization::expand_m_xy;
use ncsym::{Basis, Element, SetPartition};
use ncsym_bench::all_partitions;

fn bench_mobius(c: &mut Criterion) {
    let mut group = c.benchmark_group("mobius");
    for n in [4usize, 5, 6] {
        let (bottom, top) = (SetPartition::bottom(n), SetPartition::top(n));
        group.bench_with_input(BenchmarkId::new("memoized", n), &n, |b, _| {
            b.iter(|| mobius(black_box(&bottom), black_box(&top)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cold_cache", n), &n, |b, _| {
            b.iter(|| {
                clear_mobius_cache();
                mobius(black_box(&bottom), black_box(&top)).unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("product_form", n), &n, |b, _| {
            b.iter(|| mobius_product_form(black_box(&bottom), black_box(&top)).unwrap())
        });
        if n <= 5 {
            group.bench_with_input(BenchmarkId::new("uncached", n), &n, |b, _| {
                b.iter(|| mobius_uncached(black_box(&bottom), black_box(&top)).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_multiply(c: &mut Criterion) {
    let mut group = c.benchmark_group("multiply");
    for (left, right) in [("1|2", "1|2"), ("1,3|2", "1|2"), ("1|2|3", "1|2|3")] {
        let (a, b) = (left.parse::<SetPartition>().unwrap(), right.parse::<SetPartition>().unwrap());
        for basis in Basis::ALL {
            let (x, y) = (Element::basis_vector(basis, a.clone()), Element::basis_vector(basis, b.clone()));
            group.bench_function(format!("{basis}/{left}*{right}"), |bench| {
                bench.iter(|| black_box(&x).multiply(black_box(&y)).unwrap())
            });
        }
        let (x, y) = (
            Element::basis_vector(Basis::X, a.clone()).convert(Basis::M),
            Element::basis_vector(Basis::X, b.clone()).convert(Basis::M),
        );
        group.bench_function(format!("x_through_m/{left}*{right}"), |bench| {
            bench.iter(|| black_box(&x).multiply(black_box(&y)).unwrap())
        });
    }
    group.finish();
}

fn bench_coproduct(c: &mut Criterion) {
    let mut group = c.benchmark_group("coproduct");
    for n in [3usize, 4, 5] {
        let parts = all_partitions(n);
        group.bench_with_input(BenchmarkId::new("internal_m_all", n), &parts, |b, parts| {
            b.iter(|| {
                for a in parts {
                    black_box(Element::basis_vector(Basis::M, a.clone()).coproduct_internal());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("external_m_all", n), &parts, |b, parts| {
            b.iter(|| {
                for a in parts {
                    black_box(Element::basis_vector(Basis::M, a.clone()).coproduct_external().unwrap());
                }
            })
        });
    }
    let a: SetPartition = "1,3|2".parse().unwrap();
    group.bench_function("xy_oracle/1,3|2", |b| b.iter(|| expand_m_xy(black_box(&a), 3, 3).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_mobius, bench_multiply, bench_coproduct);
criterion_main!(benches);
