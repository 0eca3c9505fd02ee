use hermsym::canon::all_graphs;
use hermsym::conditions::{trace_cube_bound, triangle_balance, triangles_mod3};
use hermsym::search::{enumerate_orientations, find_ss_orientations, nonbipartite_graphs, SearchOptions};
use hermsym::spectra::{hermitian_spectrum, PiFraction};
use hermsym::{exact_hermitian, Graph};

fn brute_force_symmetric(g: &Graph) -> Vec<u64> {
    enumerate_orientations(g, 24)
        .unwrap()
        .filter(|(_, d)| exact_hermitian(d).is_spectrally_symmetric().unwrap())
        .map(|(id, _)| id.0)
        .collect()
}

#[test]
fn pruning_is_sound_up_to_five_vertices() {
    let opts = SearchOptions { skip_bipartite: false, ..SearchOptions::default() };
    for n in 1..=5 {
        for g in all_graphs(n).unwrap() {
            let r = find_ss_orientations(&g, &opts).unwrap();
            assert_eq!(r.symmetric_orientations, brute_force_symmetric(&g).len() as u64, "{}", r.graph);
        }
    }
}

#[test]
fn filters_never_reject_a_positive_graph() {
    for n in 3..=6 {
        for g in nonbipartite_graphs(n, true).unwrap() {
            let symmetric = brute_force_symmetric(&g);
            if symmetric.is_empty() {
                continue;
            }
            assert!(triangles_mod3(&g).passed);
            assert!(trace_cube_bound(&g).unwrap().passed);
            for id in symmetric {
                let d = hermsym::OrientationId(id).decode(&g);
                assert!(triangle_balance(&d).unwrap().passed);
            }
        }
    }
}

#[test]
fn parallel_search_matches_serial() {
    let serial = SearchOptions::default();
    for g in nonbipartite_graphs(6, false).unwrap().into_iter().filter(|g| g.edge_count() >= 10) {
        let a = find_ss_orientations(&g, &serial).unwrap().without_timing();
        for jobs in [2, 3, 8] {
            let b = find_ss_orientations(&g, &SearchOptions { jobs, ..serial.clone() }).unwrap().without_timing();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn symmetric_orientations_are_closed_under_reversal() {
    let k = Graph::complete(6).without_edges(&[(0, 1), (2, 3)]);
    let m = k.edge_count();
    let symmetric = brute_force_symmetric(&k);
    for &id in &symmetric {
        let rev = hermsym::OrientationId(id).reversed(m);
        assert!(symmetric.binary_search(&rev.0).is_ok());
        let a = exact_hermitian(&hermsym::OrientationId(id).decode(&k)).char_poly().unwrap();
        let b = exact_hermitian(&rev.decode(&k)).char_poly().unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn exact_and_numeric_verdicts_agree_on_all_orientations_of_k5_minus_triangle() {
    let g = hermsym::graphs::k5_minus_triangle();
    for (_, d) in enumerate_orientations(&g, 24).unwrap() {
        let exact = exact_hermitian(&d).is_spectrally_symmetric().unwrap();
        let spectrum = hermitian_spectrum(&d, PiFraction::THIRD.radians()).unwrap();
        assert_eq!(exact, spectrum.is_symmetric(spectrum.default_tolerance()));
    }
}
