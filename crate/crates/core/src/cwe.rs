//! Complete weight enumerator container.
//!
//! A CWE is a finite sum of monomials w_0^{k_0} ... w_{p-1}^{k_{p-1}} with
//! positive integer multiplicities, where k_rho counts occurrences of the
//! symbol rho in a codeword of length l (so each composition sums to l).
//! Stored as a map from composition to multiplicity; equal compositions
//! arising from different codewords merge automatically.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Cwe {
    /// Code length l; every composition sums to this.
    pub length: u64,
    /// Alphabet size p; every composition has this many entries.
    pub symbols: u64,
    terms: BTreeMap<Vec<u64>, u64>,
}

impl Cwe {
    pub fn new(length: u64, symbols: u64) -> Self {
        Cwe {
            length,
            symbols,
            terms: BTreeMap::new(),
        }
    }

    /// Merge in a term. Panics if the composition has the wrong shape.
    pub fn add_term(&mut self, composition: Vec<u64>, multiplicity: u64) {
        assert_eq!(composition.len() as u64, self.symbols, "composition arity");
        assert_eq!(
            composition.iter().sum::<u64>(),
            self.length,
            "composition weight"
        );
        if multiplicity == 0 {
            return;
        }
        *self.terms.entry(composition).or_insert(0) += multiplicity;
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u64], u64)> {
        self.terms.iter().map(|(c, &m)| (c.as_slice(), m))
    }

    /// Terms sorted by descending zero-symbol count, lexicographic on the
    /// rest as tie break. The all-zero codeword term comes first.
    pub fn sorted_terms(&self) -> Vec<(Vec<u64>, u64)> {
        let mut out: Vec<(Vec<u64>, u64)> =
            self.terms.iter().map(|(c, &m)| (c.clone(), m)).collect();
        out.sort_by(|a, b| b.0[0].cmp(&a.0[0]).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Hamming weight distribution: (weight, multiplicity) pairs ascending,
    /// where weight = l - k_0.
    pub fn weight_distribution(&self) -> Vec<(u64, u64)> {
        let mut map: BTreeMap<u64, u64> = BTreeMap::new();
        for (comp, mult) in &self.terms {
            *map.entry(self.length - comp[0]).or_insert(0) += mult;
        }
        map.into_iter().collect()
    }

    /// Smallest nonzero Hamming weight, if any nonzero-weight term exists.
    pub fn minimum_distance(&self) -> Option<u64> {
        self.weight_distribution()
            .into_iter()
            .map(|(w, _)| w)
            .find(|&w| w > 0)
    }
}

impl fmt::Debug for Cwe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cwe(l={}, p={}; ", self.length, self.symbols)?;
        let mut first = true;
        for (comp, mult) in self.sorted_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{mult}*{comp:?}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_equal_compositions() {
        let mut cwe = Cwe::new(3, 2);
        cwe.add_term(vec![1, 2], 4);
        cwe.add_term(vec![1, 2], 6);
        cwe.add_term(vec![3, 0], 1);
        assert_eq!(cwe.num_terms(), 2);
        assert_eq!(cwe.total_multiplicity(), 11);
    }

    #[test]
    fn zero_multiplicity_is_dropped() {
        let mut cwe = Cwe::new(2, 2);
        cwe.add_term(vec![1, 1], 0);
        assert_eq!(cwe.num_terms(), 0);
    }

    #[test]
    #[should_panic(expected = "composition weight")]
    fn rejects_wrong_weight() {
        let mut cwe = Cwe::new(3, 2);
        cwe.add_term(vec![1, 1], 1);
    }

    #[test]
    fn sorted_terms_put_zero_codeword_first() {
        let mut cwe = Cwe::new(4, 3);
        cwe.add_term(vec![2, 1, 1], 5);
        cwe.add_term(vec![4, 0, 0], 1);
        cwe.add_term(vec![2, 2, 0], 3);
        cwe.add_term(vec![0, 2, 2], 7);
        let sorted = cwe.sorted_terms();
        assert_eq!(
            sorted,
            vec![
                (vec![4, 0, 0], 1),
                (vec![2, 1, 1], 5),
                (vec![2, 2, 0], 3),
                (vec![0, 2, 2], 7),
            ]
        );
    }

    #[test]
    fn weight_distribution_and_distance() {
        let mut cwe = Cwe::new(4, 2);
        cwe.add_term(vec![4, 0], 1);
        cwe.add_term(vec![2, 2], 6);
        cwe.add_term(vec![1, 3], 8);
        assert_eq!(cwe.weight_distribution(), vec![(0, 1), (2, 6), (3, 8)]);
        assert_eq!(cwe.minimum_distance(), Some(2));
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let mut a = Cwe::new(2, 2);
        a.add_term(vec![2, 0], 1);
        a.add_term(vec![0, 2], 3);
        let mut b = Cwe::new(2, 2);
        b.add_term(vec![0, 2], 3);
        b.add_term(vec![2, 0], 1);
        assert_eq!(a, b);
    }
}
