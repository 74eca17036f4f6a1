use proptest::prelude::*;
use rectrep::charcalc::name_irrep;
use rectrep::classify::{catalogue_items, catalogue_spec};
use rectrep::{Family, RepSpec, SemisimpleAlgebra, SimpleType, Weight};
use rectrep_cli::parse::{parse_spec, render_algebra, render_rep};

#[test]
fn catalogue_items_round_trip() {
    for item in catalogue_items(6, 128) {
        let (alg, spec) = catalogue_spec(item).unwrap();
        let (a_text, r_text) = (render_algebra(&alg), render_rep(&spec));
        let (alg2, spec2) = parse_spec(&a_text, &r_text).unwrap_or_else(|e| panic!("{item}: {r_text}: {e}"));
        assert_eq!((alg2, &spec2), (alg, &spec), "{item}");
        assert_eq!(render_rep(&spec2), r_text);
    }
}

fn random_spec() -> impl Strategy<Value = RepSpec> {
    let types: Vec<SimpleType> = [(Family::A, 1), (Family::A, 2), (Family::B, 2), (Family::B, 3), (Family::D, 4), (Family::G, 2)]
        .into_iter()
        .map(|(f, r)| SimpleType::new(f, r).unwrap())
        .collect();
    proptest::collection::vec(0..types.len(), 1..=3).prop_flat_map(move |picked| {
        let alg = SemisimpleAlgebra::new(picked.iter().map(|&i| types[i]).collect()).unwrap();
        let rank = alg.rank();
        let term = (proptest::collection::vec(0i64..=3, rank), 1u32..=2);
        proptest::collection::vec(term, 1..=3).prop_map(move |terms| {
            RepSpec::new(
                alg.clone(),
                terms.into_iter().map(|(c, m)| (Weight::from_i64s(&c), m.into())),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rendered_specs_parse_back(spec in random_spec()) {
        let text = render_rep(&spec);
        let (_, back) = parse_spec(&render_algebra(spec.algebra()), &text).unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn irreducible_names_parse_to_their_weights(coords in proptest::collection::vec(0i64..=4, 4)) {
        for (f, r) in [(Family::A, 3), (Family::B, 4), (Family::C, 3), (Family::D, 4), (Family::F, 4)] {
            let t = SimpleType::new(f, r).unwrap();
            let hw = Weight::from_i64s(&coords[..r]);
            let name = name_irrep(t, &hw).to_string();
            let (alg, spec) = parse_spec(&t.to_string(), &name).unwrap();
            prop_assert_eq!(spec, RepSpec::irreducible(alg, hw).unwrap());
        }
    }

    #[test]
    fn arbitrary_text_never_panics(algebra in "[A-Ga-g0-9* ]{0,8}", rep in "[a-z0-9()+*, -]{0,24}") {
        let _ = parse_spec(&algebra, &rep);
    }
}
