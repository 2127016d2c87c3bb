//! Lemma suites over randomly sampled connected transposition sets at
//! n = 6: every report must come back clean.

use cayley_core::cayley::CayleyGraph;
use cayley_core::graph::Graph;
use cayley_core::perm::Perm;
use cayley_core::structure;
use cayley_core::transgraph::TranspositionSet;

struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

fn random_connected_set(rng: &mut SplitMix64) -> TranspositionSet {
    loop {
        let mask = rng.next_u64() & 0x7fff; // 15 candidate edges at n = 6
        let mut g = Graph::new(6).unwrap();
        let mut idx = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                if mask >> idx & 1 == 1 {
                    g.add_edge(i, j).unwrap();
                }
                idx += 1;
            }
        }
        if g.is_connected() {
            return TranspositionSet::from_graph(&g).unwrap();
        }
    }
}

fn random_perm(n: usize, rng: &mut SplitMix64) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        images.swap(i, j);
    }
    Perm::from_images(images).unwrap()
}

#[test]
fn twenty_random_connected_sets_at_n6_are_clean() {
    let mut rng = SplitMix64(0x5143_7a11);
    for sample in 0..20 {
        let ts = random_connected_set(&mut rng);
        let g = CayleyGraph::build(ts).unwrap();
        let commute = structure::verify_commute_disjoint(g.tset());
        assert!(commute.passed(), "sample {sample}");
        let mut sigmas = vec![Perm::identity(6)];
        for _ in 0..2 {
            sigmas.push(random_perm(6, &mut rng));
        }
        for sigma in &sigmas {
            assert!(
                structure::verify_four_cycle(&g, sigma).unwrap().passed(),
                "four_cycle sample {sample} sigma {sigma}"
            );
            assert!(
                structure::verify_k33(&g, sigma).unwrap().passed(),
                "k33 sample {sample} sigma {sigma}"
            );
            assert!(
                structure::verify_six_cycle(&g, sigma).unwrap().passed(),
                "six_cycle sample {sample} sigma {sigma}"
            );
        }
    }
}
