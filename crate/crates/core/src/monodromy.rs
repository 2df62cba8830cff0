//! Permutation groups generated by braid permutations.
//!
//! Stabilizer chain built with the deterministic Schreier–Sims algorithm;
//! gives the exact group order and a membership test without enumerating
//! the group.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    // point -> element sending `base` to that point
    transversal: BTreeMap<usize, Permutation>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = BTreeMap::new();
        transversal.insert(base, Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal[&self.base].degree();
        self.transversal.clear();
        self.transversal.insert(self.base, Permutation::identity(degree));
        let mut queue = vec![self.base];
        while let Some(point) = queue.pop() {
            let u = self.transversal[&point].clone();
            for g in &self.gens {
                let image = g.apply(point);
                if !self.transversal.contains_key(&image) {
                    self.transversal.insert(image, u.then(g));
                    queue.push(image);
                }
            }
        }
    }
}

/// A subgroup of `S_m` given by generators.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn generated_by(degree: usize, generators: &[Permutation]) -> Self {
        let mut group = PermGroup {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            debug_assert_eq!(g.degree(), degree);
            if let Some((residue, level)) = group.sift(g, 0) {
                group.insert(residue, level);
            }
        }
        group.complete();
        group
    }

    /// Strips `g` through the chain starting at `from`. Returns the
    /// non-trivial residue and the level where sifting stopped.
    fn sift(&self, g: &Permutation, from: usize) -> Option<(Permutation, usize)> {
        let mut h = g.clone();
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            let point = h.apply(level.base);
            match level.transversal.get(&point) {
                Some(u) => h = h.then(&u.inverse()),
                None => return Some((h, idx)),
            }
        }
        if h.is_identity() {
            None
        } else {
            Some((h, self.levels.len()))
        }
    }

    // Adds a strong generator to every level whose earlier base points it
    // fixes, opening a new level if needed.
    fn insert(&mut self, h: Permutation, level: usize) {
        if level == self.levels.len() {
            let base = (0..self.degree)
                .find(|&k| h.apply(k) != k)
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(base, self.degree));
        }
        for l in 0..=level {
            if fixes_bases(&h, &self.levels[..l]) && !self.levels[l].gens.contains(&h) {
                self.levels[l].gens.push(h.clone());
                self.levels[l].rebuild_orbit();
            }
        }
    }

    fn complete(&mut self) {
        'restart: loop {
            for i in 0..self.levels.len() {
                let points: Vec<usize> = self.levels[i].transversal.keys().copied().collect();
                for point in points {
                    let u = self.levels[i].transversal[&point].clone();
                    for s in self.levels[i].gens.clone() {
                        let image = s.apply(point);
                        let back = self.levels[i].transversal[&image].inverse();
                        let schreier = u.then(&s).then(&back);
                        if let Some((residue, level)) = self.sift(&schreier, i + 1) {
                            self.insert(residue, level);
                            continue 'restart;
                        }
                    }
                }
            }
            break;
        }
    }

    pub fn order(&self) -> BigInt {
        self.levels
            .iter()
            .map(|l| BigInt::from(l.transversal.len()))
            .fold(BigInt::one(), |a, b| a * b)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).is_none()
    }
}

fn fixes_bases(h: &Permutation, levels: &[Level]) -> bool {
    levels.iter().all(|l| h.apply(l.base) == l.base)
}
