use criterion::{criterion_group, criterion_main, Criterion};
use mhproj::git::git_fan;
use mhproj::proj::build_atlas;
use mhproj::sheaves::global_sections;
use mhproj::RingSpec;

fn workload() -> RingSpec {
    let degrees = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![1, 1, 0],
        vec![0, 1, 1],
        vec![1, 0, 1],
        vec![1, 1, 1],
        vec![2, 1, 1],
    ];
    RingSpec::new(3, degrees, None).unwrap()
}

fn run(ring: &RingSpec) {
    let atlas = build_atlas(ring);
    global_sections(ring, &atlas, &[4, 4, 4], 12).unwrap();
    git_fan(ring).unwrap();
}

fn bench(c: &mut Criterion) {
    let ring = workload();
    let sequential = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let pooled = rayon::ThreadPoolBuilder::new().build().unwrap();
    let mut group = c.benchmark_group("analysis");
    group.sample_size(10);
    group.bench_function("one_thread", |b| b.iter(|| sequential.install(|| run(&ring))));
    group.bench_function("default_pool", |b| b.iter(|| pooled.install(|| run(&ring))));
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
