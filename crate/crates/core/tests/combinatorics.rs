use proptest::prelude::*;
use tlhom::diagram::{
    catalan, compose, generator_diagram, identity_diagram, diagram_to_jones_word, enumerate_diagrams, enumerate_jacobsthal_sequences, fine_number, jacobsthal_number,
    jones_word_to_diagram,
};
use tlhom::tlalg::{jones_normal_form, FreeWord};

/// Every up/down path of length 2n staying weakly above 0, as bit patterns.
fn dyck_paths(n: usize) -> Vec<Vec<bool>> {
    (0u32..1 << (2 * n))
        .map(|m| (0..2 * n).map(|i| m >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|p| {
            let mut h = 0i32;
            p.iter().all(|&up| {
                h += if up { 1 } else { -1 };
                h >= 0
            }) && h == 0
        })
        .collect()
}

/// A hill is an up-step from height 0 followed directly by a down-step.
fn has_hill(p: &[bool]) -> bool {
    let mut h = 0;
    for i in 0..p.len() {
        if h == 0 && p[i] && !p[i + 1] {
            return true;
        }
        h += if p[i] { 1 } else { -1 };
    }
    false
}

#[test]
fn catalan_and_fine_match_path_counts() {
    for n in 0..=8 {
        let paths = dyck_paths(n);
        assert_eq!(paths.len() as u128, catalan(n), "n = {n}");
        let hill_free = paths.iter().filter(|p| !has_hill(p)).count() as u128;
        assert_eq!(hill_free, fine_number(n), "n = {n}");
    }
    assert_eq!((0..8).map(fine_number).collect::<Vec<_>>(), [1, 0, 1, 2, 6, 18, 57, 186]);
}

#[test]
fn jacobsthal_closed_form() {
    for n in 1..=12usize {
        let closed = ((1i128 << n) - if n % 2 == 0 { 1 } else { -1 }) / 3;
        assert_eq!(jacobsthal_number(n) as i128, closed, "n = {n}");
    }
    assert_eq!(enumerate_jacobsthal_sequences(3), vec![vec![], vec![2], vec![2, 1]]);
}

#[test]
fn diagrams_are_distinct() {
    for n in 0..=6 {
        let mut d = enumerate_diagrams(n);
        let total = d.len();
        d.sort();
        d.dedup();
        assert_eq!(d.len(), total);
    }
}

proptest! {
    #[test]
    fn normal_form_is_idempotent_and_matches_diagrams(n in 2usize..7, letters in prop::collection::vec(1usize..7, 0..12)) {
        let letters: Vec<usize> = letters.into_iter().filter(|&i| i < n).collect();
        let w = FreeWord::new(n, letters).unwrap();
        let (loops, jw) = jones_normal_form(&w).unwrap();
        let (again, same) = jones_normal_form(&FreeWord::from(&jw)).unwrap();
        prop_assert_eq!(again, 0);
        prop_assert_eq!(&same, &jw);
        let d = jones_word_to_diagram(&jw).unwrap();
        prop_assert_eq!(diagram_to_jones_word(&d), jw);
        let mut direct = identity_diagram(n);
        let mut direct_loops = 0;
        for &i in &w.letters {
            let (next, l) = compose(&direct, &generator_diagram(n, i).unwrap()).unwrap();
            direct = next;
            direct_loops += l;
        }
        prop_assert_eq!(loops, direct_loops);
        prop_assert_eq!(d, direct);
    }
}
