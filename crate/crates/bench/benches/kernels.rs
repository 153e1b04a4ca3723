use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use slchar::kostka::{build_kostka_matrix, invert_unitriangular, kostka_index_set, kostka_poly};
use slchar::lattice::QuadraticForm;
use slchar::weights::{cartan_matrix, partition_to_weight};
use slchar::{char_v_general, char_v_rect, RankedWeight, RectangularSequence};

fn kostka(c: &mut Criterion) {
    let lambda = RankedWeight::new(vec![0, 0, 0]).unwrap();
    let n = RectangularSequence::new(vec![1, 2, 1]).unwrap();
    c.bench_function("kostka_poly (0,0,0) x (1,2,1)", |b| {
        b.iter(|| kostka_poly(black_box(&lambda), black_box(&n)).unwrap())
    });

    // Every entry of the sl4 table, bypassing the matrix cache.
    let weights: Vec<RankedWeight> = kostka_index_set(3, 4, 12, 0)
        .iter()
        .map(|p| partition_to_weight(p, 3).unwrap())
        .collect();
    let seqs: Vec<RectangularSequence> = weights.iter().map(|w| RectangularSequence::from_weight(w).unwrap()).collect();
    c.bench_function("sl4 Kostka table entries", |b| {
        b.iter(|| {
            for w in &weights {
                for s in &seqs {
                    black_box(kostka_poly(w, s).unwrap());
                }
            }
        })
    });

    let m = build_kostka_matrix(3, 4, 12, 0).unwrap();
    c.bench_function("invert sl4 Kostka matrix", |b| b.iter(|| invert_unitriangular(black_box(&m)).unwrap()));
}

fn characters(c: &mut Criterion) {
    let mut g = c.benchmark_group("characters");
    g.sample_size(10);
    g.bench_function("char_v_rect r=2 k=2 l=1 D=8", |b| b.iter(|| char_v_rect(2, 2, 1, 1, black_box(8)).unwrap()));
    let lambda = RankedWeight::new(vec![1, 1]).unwrap();
    g.bench_function("char_v_general (1,1) k=3 D=4", |b| {
        b.iter(|| char_v_general(black_box(&lambda), 3, 4).unwrap())
    });
    g.finish();
}

fn lattice(c: &mut Criterion) {
    // Gram of the two-line form for r = 2, k = 3: blockdiag(C, C ⊗ B).
    let cart = cartan_matrix(2);
    let b = [[2i64, 1], [1, 2]];
    let dim = 6;
    let mut gram = vec![vec![0i64; dim]; dim];
    for i in 0..2 {
        for j in 0..2 {
            gram[i][j] = 3 * cart[i][j];
            for a in 0..2 {
                for bb in 0..2 {
                    gram[2 + 2 * i + a][2 + 2 * j + bb] = 3 * cart[i][j] * b[a][bb];
                }
            }
        }
    }
    let form = QuadraticForm::new(gram, vec![0; dim], 3, vec![None, None, Some(0), Some(0), Some(0), Some(0)]).unwrap();
    c.bench_function("lattice points, 6-dim positive form", |bch| {
        bch.iter(|| form.points_up_to(black_box(8)).len())
    });
}

criterion_group!(benches, kostka, characters, lattice);
criterion_main!(benches);
