use proptest::prelude::*;

use stabloc::locality::{self, delta, eta};
use stabloc::spectral::{check_theorem2, extension_span, random_local_hamiltonian};
use stabloc::stabilizer::random_stabilizer_group;
use stabloc::stabilizer::text::CheckMatrixFile;
use stabloc::surface;
use stabloc::{GroupExtension, StabilizerGroup};

fn group() -> impl Strategy<Value = StabilizerGroup> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), 1..=n, any::<u64>()))
        .prop_map(|(n, m, seed)| random_stabilizer_group(n, m, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip_preserves_group(g in group()) {
        let file = CheckMatrixFile::parse(&g.to_text()).unwrap();
        let back = StabilizerGroup::validate(file.n, &file.generators).unwrap();
        prop_assert!(back.is_same_group(&g));
    }

    #[test]
    fn metric_bounds(g in group()) {
        let d = delta(&g).unwrap().value;
        let e = eta(&g).unwrap().value;
        let max_gen = g.generators().iter().map(|p| p.weight()).max().unwrap();
        let min_gen = g.generators().iter().map(|p| p.weight()).min().unwrap();
        prop_assert!(d <= min_gen);
        prop_assert!(e <= max_gen);
        prop_assert!(d <= e);
        prop_assert!(g.subgroup_nu(e).unwrap().is_same_group(&g));
        if e > 0 {
            prop_assert!(!g.subgroup_nu(e - 1).unwrap().is_same_group(&g));
        }
    }

    #[test]
    fn eta_generators_have_bounded_weight(g in group()) {
        let r = eta(&g).unwrap();
        let gens = r.generators().unwrap();
        prop_assert!(gens.iter().all(|p| p.weight() <= r.value));
        let spanned = StabilizerGroup::validate(g.num_qubits(), gens).unwrap();
        prop_assert!(spanned.is_same_group(&g));
    }

    #[test]
    fn extensions_agree_on_local_traces(g in group(), seed in any::<u64>()) {
        let n = g.num_qubits();
        let e = eta(&g).unwrap().value;
        prop_assume!(e >= 2 && n <= 5);
        let nu = e - 1;
        let h = random_local_hamiltonian(n, nu, seed).unwrap();
        let ext = GroupExtension::new(&g, nu).unwrap();
        for b in ext.bitstrings(8).unwrap() {
            prop_assert!(check_theorem2(&g, nu, &b, &h).unwrap().holds);
        }
    }

    #[test]
    fn extension_codespaces_are_orthogonal(g in group()) {
        let e = eta(&g).unwrap().value;
        prop_assume!(e >= 2 && g.num_qubits() <= 5);
        let c = extension_span(&g, e - 1, 8).unwrap();
        let q = 1usize << g.logical_qubits();
        prop_assert_eq!(c.rank, c.extensions * q);
    }
}

#[test]
fn toric_family() {
    for l in 2..=4 {
        let c = surface::toric(l).unwrap();
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.dim_h1(), 2);
        let g = c.build_code().unwrap();
        assert_eq!(g.logical_qubits(), 2);
        assert_eq!(delta(&g).unwrap().value, 4);
        assert_eq!(eta(&g).unwrap().value, 4);
        let dual = c.dual();
        assert_eq!(dual.num_faces(), c.num_vertices());
        assert_eq!(dual.num_vertices(), c.num_faces());
        assert_eq!(dual.build_code().unwrap().logical_qubits(), 2);
    }
}

#[test]
fn surface_codes_are_xz_split() {
    for c in [surface::theta(), surface::cube(), surface::valence_counterexample()] {
        let g = c.build_code().unwrap();
        let split = locality::css_split(&g);
        assert!(split.is_split);
        assert_eq!(split.gx.num_generators() + split.gz.num_generators(), g.num_generators());
        assert_eq!(g.logical_qubits(), c.dim_h1());
        locality::css_locality(&g).unwrap();
    }
}
