use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use grouplat_core::factory::{parse_spec, projective, sym};
use grouplat_core::lattice::{interval, DEFAULT_ELEMENT_BUDGET};
use grouplat_core::product::{product_maximals, DirectProduct};
use grouplat_core::{Flavor, Group};

fn schreier_sims(c: &mut Criterion) {
    let gens = projective(3, 4, Flavor::Pgl).unwrap().group.generators().to_vec();
    let degree = gens[0].degree();
    c.bench_function("schreier_sims PGL3(4) on 21 points", |b| {
        b.iter(|| Group::generate(degree, black_box(gens.clone())).unwrap().order())
    });
}

fn intervals(c: &mut Criterion) {
    let a8 = parse_spec("alt:8").unwrap().group;
    let h = parse_spec("eqpart-even:8,2").unwrap().group;
    c.bench_function("interval of the equipartition stabilizer in A8", |b| {
        b.iter(|| interval(black_box(&h), &a8).unwrap().nodes.len())
    });
    let s5 = sym(5);
    let trivial = Group::trivial(5);
    c.bench_function("all subgroups of S5", |b| {
        b.iter(|| grouplat_core::lattice::overgroups(black_box(&trivial), &s5, DEFAULT_ELEMENT_BUDGET).unwrap().len())
    });
}

fn products(c: &mut Criterion) {
    let p = DirectProduct::new(&sym(3), &sym(4));
    c.bench_function("maximal subgroups of S3 x S4", |b| b.iter(|| product_maximals(black_box(&p)).unwrap().len()));
}

criterion_group!(benches, schreier_sims, intervals, products);
criterion_main!(benches);
