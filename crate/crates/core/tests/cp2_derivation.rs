//! Regenerates the bundled 9-vertex CP² facet list by exhaustive search.
//!
//! The triangulation is invariant under the translation group of the 3x3
//! vertex grid (vertex 3a + b + 1 for (a, b) in Z₃²). A facet orbit under
//! translations has size 9, so the complex is a union of 4 of the 14
//! orbit classes of 5-subsets. Every 4-subset choice is tested against
//! the full profile a 9-vertex complex-projective-plane triangulation
//! must have: 36 facets, f = (9, 36, 84, 90, 36), a closed homology
//! 4-manifold over GF(2) and GF(3), Betti numbers (0, 0, 1, 0, 1).
//! The lexicographically least hit is the bundled fixture.

use std::collections::{BTreeSet, HashMap};

use facekit::complex::SimplicialComplex;
use facekit::field::FieldSpec;
use facekit::generators;
use facekit::homology::betti;
use facekit::manifold::is_homology_manifold;

fn translate(face: &[u8], s: u8, t: u8) -> Vec<u8> {
    let mut out: Vec<u8> = face
        .iter()
        .map(|&v| {
            let (a, b) = (v / 3, v % 3);
            ((a + s) % 3) * 3 + (b + t) % 3
        })
        .collect();
    out.sort_unstable();
    out
}

fn orbit(face: &[u8]) -> BTreeSet<Vec<u8>> {
    let mut set = BTreeSet::new();
    for s in 0..3 {
        for t in 0..3 {
            set.insert(translate(face, s, t));
        }
    }
    set
}

fn orbit_classes() -> Vec<BTreeSet<Vec<u8>>> {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut classes = Vec::new();
    // All 5-subsets of {0..8}.
    for mask in 0u16..512 {
        if mask.count_ones() != 5 {
            continue;
        }
        let face: Vec<u8> = (0..9).filter(|i| mask >> i & 1 == 1).collect();
        if seen.contains(&face) {
            continue;
        }
        let orb = orbit(&face);
        seen.extend(orb.iter().cloned());
        classes.push(orb);
    }
    classes
}

/// Cheap filter: every 3-face of a closed pseudomanifold lies in exactly
/// two facets.
fn is_pseudomanifold(facets: &[Vec<u8>]) -> bool {
    let mut ridge_count: HashMap<Vec<u8>, u32> = HashMap::new();
    for f in facets {
        for skip in 0..f.len() {
            let ridge: Vec<u8> = f
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v)
                .collect();
            *ridge_count.entry(ridge).or_insert(0) += 1;
        }
    }
    ridge_count.values().all(|&c| c == 2)
}

#[test]
fn exhaustive_search_recovers_the_bundled_cp2() {
    let classes = orbit_classes();
    assert_eq!(classes.len(), 14);

    let gf2 = FieldSpec::prime(2).unwrap();
    let gf3 = FieldSpec::prime(3).unwrap();
    let mut hits: Vec<Vec<Vec<u32>>> = Vec::new();
    let k = classes.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let facets: Vec<Vec<u8>> = [a, b, c, d]
                        .iter()
                        .flat_map(|&i| classes[i].iter().cloned())
                        .collect();
                    if !is_pseudomanifold(&facets) {
                        continue;
                    }
                    let labelled: Vec<Vec<u32>> = facets
                        .iter()
                        .map(|f| f.iter().map(|&v| v as u32 + 1).collect())
                        .collect();
                    let cx = SimplicialComplex::build(&labelled).unwrap();
                    if cx.f_vector() != vec![1, 9, 36, 84, 90, 36] {
                        continue;
                    }
                    let report = is_homology_manifold(&cx, &gf2);
                    if !report.is_manifold || report.has_boundary() {
                        continue;
                    }
                    if betti(&cx, &gf2) != vec![0, 0, 0, 1, 0, 1] {
                        continue;
                    }
                    if betti(&cx, &gf3) != vec![0, 0, 0, 1, 0, 1] {
                        continue;
                    }
                    hits.push(cx.facets().to_vec());
                }
            }
        }
    }

    assert!(!hits.is_empty(), "search found no candidate");
    hits.sort();
    let least = &hits[0];
    println!("hits: {}", hits.len());
    for f in least {
        println!("    {:?},", f);
    }
    let bundled = generators::cp2_9();
    assert_eq!(
        bundled.facets(),
        &least[..],
        "bundled list is the lexicographically least hit; search found {} hit(s), first:\n{:?}",
        hits.len(),
        least
    );
}
