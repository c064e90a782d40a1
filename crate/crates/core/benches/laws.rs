use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use doublelift::examples::single_object_dec;
use doublelift::exec::Strategy;
use doublelift::lift::{interchange_sweep, lift_unchecked};
use doublelift::{Monoid, MonoidAction, Precosheaf};
use std::hint::black_box;

// Z_p ⋊ Z_{p-1} through multiplication by the primitive root 2.
fn full_affine(p: usize) -> MonoidAction {
    MonoidAction::cyclic(p - 1, Monoid::cyclic(p), (0..p).map(|x| 2 * x % p).collect()).unwrap()
}

fn bench_laws(c: &mut Criterion) {
    let mut group = c.benchmark_group("lift_laws");
    group.sample_size(10);
    for p in [5, 11, 13] {
        let action = full_affine(p);
        let dec = single_object_dec(action.acting(), action.on()).unwrap();
        let phi = Precosheaf::from_monoid_action(&action).unwrap();
        let l = lift_unchecked(&dec, &phi).unwrap();
        for strategy in [Strategy::Sequential, Strategy::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{strategy:?}"), p), &l, |b, l| {
                b.iter(|| black_box(l.laws(strategy).all_passed()))
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("interchange_sweep");
    group.sample_size(10);
    for p in [11, 13] {
        let phi = Precosheaf::from_monoid_action(&full_affine(p)).unwrap();
        for strategy in [Strategy::Sequential, Strategy::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{strategy:?}"), p), &phi, |b, phi| {
                b.iter(|| black_box(interchange_sweep(phi, strategy).1))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_laws);
criterion_main!(benches);
