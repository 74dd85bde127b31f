//! Reidemeister-Schreier presentations of finite-index subgroups.
//!
//! Given a presented group, a homomorphism onto a finite permutation group,
//! and a subgroup `K` of the image, this produces a presentation of the
//! preimage of `K`: cosets are enumerated by breadth-first search (the
//! transversal is shortlex-least, so output is deterministic), Schreier
//! generators are the non-tree coset/generator pairs, and every relator is
//! rewritten once per coset.

use std::collections::HashMap;

use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::surface::GroupPresentation;

/// One Schreier generator `t x tbar^{-1}`: its word in the original
/// generators and its image in the ambient permutation group (which lies in
/// `K` by construction).
#[derive(Debug, Clone)]
pub struct SchreierGenerator {
    pub word: Vec<i32>,
    pub image: Permutation,
}

#[derive(Debug, Clone)]
pub struct SubgroupPresentation {
    pub presentation: GroupPresentation,
    pub generators: Vec<SchreierGenerator>,
    pub transversal_words: Vec<Vec<i32>>,
    pub index: usize,
}

/// Evaluates a word of signed 1-based generator indices through images,
/// multiplying left to right.
pub fn evaluate_word(images: &[Permutation], word: &[i32]) -> Permutation {
    let degree = images
        .first()
        .map(|p| p.n())
        .expect("at least one generator image");
    let mut out = Permutation::identity(degree);
    for &letter in word {
        let idx = letter.unsigned_abs() as usize - 1;
        let img = if letter > 0 {
            images[idx].clone()
        } else {
            images[idx].inverse()
        };
        out = out.then(&img);
    }
    out
}

/// Closure of a generating set inside the finite permutation group.
pub fn closure(generators: &[Permutation], degree: usize) -> Vec<Permutation> {
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    let mut elements = vec![Permutation::identity(degree)];
    seen.insert(elements[0].images().to_vec(), ());
    let mut frontier = elements.clone();
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = x.then(g);
            if seen.insert(y.images().to_vec(), ()).is_none() {
                elements.push(y.clone());
                frontier.push(y);
            }
        }
    }
    elements
}

/// Canonical key for the right coset `K sigma`: the lexicographically least
/// image table among `{k sigma : k in K}`.
fn coset_key(k_elements: &[Permutation], sigma: &Permutation) -> Vec<usize> {
    k_elements
        .iter()
        .map(|k| k.then(sigma).images().to_vec())
        .min()
        .expect("subgroup is nonempty")
}

/// Computes a presentation of the preimage of the subgroup generated by
/// `subgroup_gens` under the homomorphism sending the presentation's
/// generators to `images`.
pub fn subgroup_presentation(
    pres: &GroupPresentation,
    images: &[Permutation],
    subgroup_gens: &[Permutation],
) -> Result<SubgroupPresentation> {
    if images.len() != pres.generators {
        return Err(Error::InvalidHom(format!(
            "expected {} generator images, got {}",
            pres.generators,
            images.len()
        )));
    }
    let degree = images
        .first()
        .map(|p| p.n())
        .ok_or_else(|| Error::Unsupported("presentation without generators".into()))?;
    if images.iter().any(|p| p.n() != degree)
        || subgroup_gens.iter().any(|p| p.n() != degree)
    {
        return Err(Error::InvalidHom("mixed permutation degrees".into()));
    }
    for relator in &pres.relators {
        let image = evaluate_word(images, relator);
        if !image.is_identity() {
            return Err(Error::InvalidHom(format!(
                "images do not satisfy relator {relator:?}: image {image}"
            )));
        }
    }
    let k_elements = closure(subgroup_gens, degree);

    // letter l (0-based): 2x = generator x+1, 2x+1 = its inverse
    let letter_count = 2 * pres.generators;
    let letter_images: Vec<Permutation> = (0..letter_count)
        .map(|l| {
            let img = &images[l / 2];
            if l % 2 == 0 {
                img.clone()
            } else {
                img.inverse()
            }
        })
        .collect();

    // breadth-first coset enumeration
    let mut key_to_index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut reps: Vec<Permutation> = vec![Permutation::identity(degree)];
    let mut transversal_words: Vec<Vec<i32>> = vec![vec![]];
    let mut tree: Vec<Vec<bool>> = vec![vec![false; letter_count]];
    key_to_index.insert(coset_key(&k_elements, &reps[0]), 0);
    let mut table: Vec<Vec<usize>> = Vec::new();

    let mut c = 0;
    while c < reps.len() {
        let mut row = vec![usize::MAX; letter_count];
        for l in 0..letter_count {
            let target = reps[c].then(&letter_images[l]);
            let key = coset_key(&k_elements, &target);
            let idx = match key_to_index.get(&key) {
                Some(&idx) => idx,
                None => {
                    let idx = reps.len();
                    key_to_index.insert(key, idx);
                    reps.push(target);
                    let mut word = transversal_words[c].clone();
                    let signed = if l % 2 == 0 {
                        (l / 2 + 1) as i32
                    } else {
                        -((l / 2 + 1) as i32)
                    };
                    word.push(signed);
                    transversal_words.push(word);
                    tree.push(vec![false; letter_count]);
                    // the discovery edge and its reverse both belong to the tree
                    tree[c][l] = true;
                    tree[idx][l ^ 1] = true;
                    idx
                }
            };
            row[l] = idx;
        }
        table.push(row);
        c += 1;
    }
    let index = reps.len();

    // Schreier generators: non-tree (coset, positive generator) pairs
    let mut gen_index: Vec<Vec<Option<usize>>> = vec![vec![None; pres.generators]; index];
    let mut generators: Vec<SchreierGenerator> = Vec::new();
    for c in 0..index {
        for x in 0..pres.generators {
            if tree[c][2 * x] {
                continue;
            }
            let target = table[c][2 * x];
            let mut word = transversal_words[c].clone();
            word.push((x + 1) as i32);
            word.extend(transversal_words[target].iter().rev().map(|&l| -l));
            let image = reps[c].then(&images[x]).then(&reps[target].inverse());
            debug_assert!(
                k_elements.iter().any(|k| k == &image),
                "schreier generator image must lie in the subgroup"
            );
            gen_index[c][x] = Some(generators.len());
            generators.push(SchreierGenerator { word, image });
        }
    }

    // rewrite every relator once per coset
    let mut relators: Vec<Vec<i32>> = Vec::new();
    for c in 0..index {
        for relator in &pres.relators {
            let mut out: Vec<i32> = Vec::new();
            let mut u = c;
            for &letter in relator {
                let x = letter.unsigned_abs() as usize - 1;
                if letter > 0 {
                    if let Some(g) = gen_index[u][x] {
                        push_reduced(&mut out, (g + 1) as i32);
                    }
                    u = table[u][2 * x];
                } else {
                    let v = table[u][2 * x + 1];
                    if let Some(g) = gen_index[v][x] {
                        push_reduced(&mut out, -((g + 1) as i32));
                    }
                    u = v;
                }
            }
            debug_assert_eq!(u, c, "a relator must stabilize every coset");
            relators.push(out);
        }
    }

    let presentation = GroupPresentation::new(generators.len(), relators)?;
    Ok(SubgroupPresentation {
        presentation,
        generators,
        transversal_words,
        index,
    })
}

fn push_reduced(word: &mut Vec<i32>, letter: i32) {
    if word.last() == Some(&-letter) {
        word.pop();
    } else {
        word.push(letter);
    }
}

/// Discrete logarithm in the cyclic group generated by `gen`: the least
/// `e >= 0` with `gen^e == x`.
pub fn cyclic_dlog(gen: &Permutation, x: &Permutation) -> Option<u64> {
    let mut acc = Permutation::identity(gen.n());
    let mut e = 0u64;
    loop {
        if &acc == x {
            return Some(e);
        }
        acc = acc.then(gen);
        e += 1;
        if acc.is_identity() && e > 0 {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::cyclic_generator_permutation;
    use crate::surface::smith::abelianization;
    use crate::surface::SurfacePresentation;

    #[test]
    fn index_one_returns_the_input() {
        // K = whole image: the rewriting is the identity up to renaming.
        let p = SurfacePresentation::nonorientable_even(0).to_group_presentation();
        let cyc = cyclic_generator_permutation(4);
        let images = vec![cyc.pow(2), cyc.clone()];
        let out = subgroup_presentation(&p, &images, &[cyc]).unwrap();
        assert_eq!(out.index, 1);
        assert_eq!(out.presentation.generators, 2);
        assert_eq!(out.presentation.relators, p.relators);
    }

    #[test]
    fn klein_bottle_trivial_subgroup_cover_is_a_torus() {
        // Klein bottle group onto Z_4 (u -> 2, v -> 1), K trivial: the cover
        // has Euler characteristic 4 * 0 = 0 and must abelianize to Z^2.
        let p = SurfacePresentation::nonorientable_even(0).to_group_presentation();
        let cyc = cyclic_generator_permutation(4);
        let images = vec![cyc.pow(2), cyc.clone()];
        let identity = Permutation::identity(4);
        let out = subgroup_presentation(&p, &images, &[identity]).unwrap();
        assert_eq!(out.index, 4);
        assert_eq!(
            out.presentation.euler_characteristic(),
            4 * p.euler_characteristic()
        );
        let ab = abelianization(&out.presentation);
        assert_eq!(ab.rank, 2);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn index_two_subgroup_of_crosscap_torus_group() {
        // c, a1, b1 | c^2 [a1,b1], mapped onto Sigma_3 by c -> (1,2),
        // a1, b1 -> (1,3,2); K = <(1,3,2)> has index 2. The cover doubles the
        // Euler characteristic: chi = -2, i.e. deficiency 1 - G + R = -2.
        let p = GroupPresentation::new(3, vec![vec![1, 1, 2, 3, -2, -3]]).unwrap();
        let swap = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let cyc = cyclic_generator_permutation(3);
        let images = vec![swap, cyc.clone(), cyc.clone()];
        let out = subgroup_presentation(&p, &images, std::slice::from_ref(&cyc)).unwrap();
        assert_eq!(out.index, 2);
        assert_eq!(out.presentation.generators, 3 * 2 - 1);
        assert_eq!(out.presentation.relators.len(), 2);
        assert_eq!(out.presentation.euler_characteristic(), -2);
        // every Schreier generator image lies in K
        for g in &out.generators {
            assert!(cyclic_dlog(&cyc, &g.image).is_some());
        }
    }

    #[test]
    fn dlog_in_cyclic_group() {
        let cyc = cyclic_generator_permutation(6);
        assert_eq!(cyclic_dlog(&cyc, &cyc.pow(4)), Some(4));
        assert_eq!(cyclic_dlog(&cyc, &Permutation::identity(6)), Some(0));
        let swap = Permutation::from_cycles(6, &[vec![1, 2]]).unwrap();
        assert_eq!(cyclic_dlog(&cyc, &swap), None);
    }
}
