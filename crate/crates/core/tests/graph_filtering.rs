//! Spectral and matrix-rational filtering on random graphs.

use graph_iir::filter::{apply_rational_matrix_filter, apply_spectral_filter, graph_fourier};
use graph_iir::prototype::design_prototype;
use graph_iir::{Family, Graph, GraphSignal, PrototypeSpec, RationalResponse};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, max_nodes: usize) -> Graph {
    let n = rng.gen_range(2..=max_nodes);
    let p = rng.gen_range(0.05..0.6);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j, rng.gen_range(0.1..3.0)));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn random_signal(rng: &mut ChaCha8Rng, n: usize) -> GraphSignal {
    GraphSignal::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect())
}

fn max_abs_diff(a: &GraphSignal, b: &GraphSignal) -> f64 {
    a.values.iter().zip(&b.values).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn spectrum_lies_in_unit_band() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 40);
        let d = g.laplacian_spectrum().unwrap();
        for &v in d.eigenvalues() {
            assert!((0.0..=2.0 + 1e-9).contains(&v), "{v}");
        }
        let l = g.normalized_laplacian();
        assert!((d.reconstruct() - &l).amax() < 1e-11);
        let u = d.eigenvectors();
        let n = g.node_count();
        assert!((u.transpose() * u - graph_iir::Matrix::identity(n, n)).amax() < 1e-12);
    }
}

#[test]
fn transform_preserves_energy() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let g = random_graph(&mut rng, 50);
        let d = g.laplacian_spectrum().unwrap();
        let x = random_signal(&mut rng, g.node_count());
        let xh = graph_fourier(&d, &x).unwrap();
        let energy = xh.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((energy - x.norm()).abs() < 1e-12);
    }
}

#[test]
fn degree_weighted_constant_is_the_lowest_mode() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 30);
        let d = g.laplacian_spectrum().unwrap();
        // D^{1/2}·1 is annihilated by the normalized Laplacian.
        let x = GraphSignal::new(g.degrees().iter().map(|v| v.sqrt()).collect());
        let xh = graph_fourier(&d, &x).unwrap();
        for (s, &lambda) in xh.iter().zip(d.eigenvalues()) {
            if lambda > 1e-9 {
                assert!(s.abs() < 1e-10 * x.norm(), "λ={lambda}: {s}");
            }
        }
    }
}

#[test]
fn unit_response_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let g = random_graph(&mut rng, 25);
    let d = g.laplacian_spectrum().unwrap();
    let x = random_signal(&mut rng, g.node_count());
    let once = apply_spectral_filter(&d, |_| 1.0, &x).unwrap();
    let twice = apply_spectral_filter(&d, |_| 1.0, &once).unwrap();
    let again = apply_spectral_filter(&d, |_| 1.0, &x).unwrap();
    assert_eq!(once, again);
    assert!(max_abs_diff(&once, &twice) < 1e-13);
    assert!(max_abs_diff(&once, &x) < 1e-13);
}

#[test]
fn matrix_filter_matches_spectral() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let spec = |family| PrototypeSpec {
        family,
        lambda_p: 1.0,
        lambda_s: 1.2,
        rp_db: 1.0,
        as_db: 30.0,
    };
    for _ in 0..10 {
        let g = random_graph(&mut rng, 50);
        let d = g.laplacian_spectrum().unwrap();
        let x = random_signal(&mut rng, g.node_count());
        for family in Family::ALL {
            for n in 1..=8 {
                let (set, _) = design_prototype(&spec(family), Some(n)).unwrap();
                let r = RationalResponse::compose(&set, 1.0).unwrap();
                let spectral = apply_spectral_filter(&d, |l| r.evaluate(l), &x).unwrap();
                let matrix = apply_rational_matrix_filter(&g, &r, &x).unwrap();
                let err = max_abs_diff(&spectral, &matrix) / spectral.norm().max(x.norm() * 1e-3);
                assert!(err < 1e-8, "{family} N={n}: {err:e}");
            }
        }
    }
}

#[test]
fn isolated_nodes_pass_through_at_zero_frequency() {
    let g = Graph::new(3, vec![(0, 1, 1.0)]).unwrap();
    let d = g.laplacian_spectrum().unwrap();
    assert!(d.eigenvalues()[0].abs() < 1e-15);
    let x = GraphSignal::new(vec![0.0, 0.0, 2.5]);
    let y = apply_spectral_filter(&d, |l| if l < 0.5 { 1.0 } else { 0.0 }, &x).unwrap();
    assert!(max_abs_diff(&x, &y) < 1e-15);
}
