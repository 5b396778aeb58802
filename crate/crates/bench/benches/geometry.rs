use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use multiline_core::geometry::{build_geometry, dual_graph, find_grids, mub_line_sets, GridQuery};
use multiline_core::graphs::{
    complete_bipartite, is_isomorphic, line_graph, maximal_cliques, spectrum_exact,
};
use multiline_core::pauli::SystemSpec;
use multiline_core::rings::{neighbor_graph, ProductRing};
use multiline_core::IncidenceGeometry;

fn geometry(dims: &[u32]) -> IncidenceGeometry {
    build_geometry(&SystemSpec::new(dims.to_vec()).unwrap()).unwrap()
}

fn spectra(c: &mut Criterion) {
    let p9 = geometry(&[3, 3]).pauli_graph().clone();
    let w8 = dual_graph(&geometry(&[2, 2, 2])).graph().clone();
    c.bench_function("spectrum P9", |b| {
        b.iter(|| spectrum_exact(black_box(&p9)).unwrap())
    });
    c.bench_function("spectrum W8", |b| {
        b.iter(|| spectrum_exact(black_box(&w8)).unwrap())
    });
}

fn cliques(c: &mut Criterion) {
    let p8 = geometry(&[2, 2, 2]).pauli_graph().clone();
    c.bench_function("maximal cliques P8", |b| {
        b.iter(|| maximal_cliques(black_box(&p8), 7))
    });
    let g9 = geometry(&[3, 3]);
    c.bench_function("disjoint line sets W9", |b| {
        b.iter(|| mub_line_sets(black_box(&g9)))
    });
    c.bench_function("build geometry [3,3]", |b| {
        b.iter(|| build_geometry(&SystemSpec::new(black_box(vec![3, 3])).unwrap()).unwrap())
    });
}

fn isomorphism(c: &mut Criterion) {
    let w6 = dual_graph(&geometry(&[2, 3])).graph().unweighted();
    let rook = line_graph(&complete_bipartite(4, 3));
    let ring = neighbor_graph(&ProductRing::new(vec![2, 3]).unwrap());
    c.bench_function("W6 vs rook graph", |b| {
        b.iter(|| is_isomorphic(black_box(&w6), &rook))
    });
    c.bench_function("W6 vs ring line", |b| {
        b.iter(|| is_isomorphic(black_box(&w6), &ring))
    });
}

fn grids(c: &mut Criterion) {
    let d9 = dual_graph(&geometry(&[3, 3]));
    c.bench_function("4x4 grids W9", |b| {
        b.iter(|| find_grids(black_box(&d9), GridQuery::new(4, 4)).unwrap())
    });
}

criterion_group!(benches, spectra, cliques, isomorphism, grids);
criterion_main!(benches);
