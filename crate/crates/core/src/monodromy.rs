//! Pairs of permutations `(σ₁, σ₂)` describing how the sheets of a degree-n
//! covering are permuted around two branch points.
//!
//! Points are `0..n` internally and `1..=n` in text. Composites apply `σ₁`
//! first, then `σ₂`.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest degree accepted by [`are_equivalent`].
pub const EQUIVALENCE_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (pos, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::parse(
                    pos,
                    format!("image {} out of range 1..={n}", x + 1),
                ));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::parse(pos, format!("image {} repeated", x + 1)));
            }
        }
        Ok(Permutation { images })
    }

    /// Disjoint cycles over `1..=n` given as text, e.g. `(1 2)(3 4)`.
    /// Points not mentioned are fixed; `()` or the empty string is the
    /// identity.
    pub fn from_cycles(text: &str, n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut chars = text.char_indices().peekable();
        while let Some((pos, ch)) = chars.next() {
            match ch {
                c if c.is_whitespace() || c == ',' => {}
                '(' => {
                    let mut cycle: Vec<usize> = Vec::new();
                    let mut closed = false;
                    while let Some((p, c)) = chars.next() {
                        if c == ')' {
                            closed = true;
                            break;
                        }
                        if c.is_whitespace() || c == ',' {
                            continue;
                        }
                        if !c.is_ascii_digit() {
                            return Err(Error::parse(p, format!("unexpected character {c:?}")));
                        }
                        let mut end = p + c.len_utf8();
                        while let Some(&(q, d)) = chars.peek() {
                            if !d.is_ascii_digit() {
                                break;
                            }
                            end = q + d.len_utf8();
                            chars.next();
                        }
                        let x: usize = text[p..end]
                            .parse()
                            .map_err(|_| Error::parse(p, "number too large"))?;
                        if x == 0 || x > n {
                            return Err(Error::parse(p, format!("point {x} out of range 1..={n}")));
                        }
                        if std::mem::replace(&mut used[x - 1], true) {
                            return Err(Error::parse(p, format!("point {x} appears twice")));
                        }
                        cycle.push(x - 1);
                    }
                    if !closed {
                        return Err(Error::parse(pos, "unclosed cycle"));
                    }
                    for (a, b) in cycle.iter().circular_tuple_windows() {
                        images[*a] = *b;
                    }
                }
                c => return Err(Error::parse(pos, format!("unexpected character {c:?}"))),
            }
        }
        Ok(Permutation { images })
    }

    /// One-line notation over `1..=n`, e.g. `2 1 4 3`.
    pub fn from_one_line(text: &str) -> Result<Self> {
        let mut images = Vec::new();
        let mut positions = Vec::new();
        let mut rest = text;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace() && c != ',') {
            let token_end = rest[start..]
                .find(|c: char| c.is_whitespace() || c == ',')
                .map_or(rest.len(), |e| start + e);
            let token = &rest[start..token_end];
            let pos = offset + start;
            let x: usize = token
                .parse()
                .map_err(|_| Error::parse(pos, format!("not a positive integer: {token:?}")))?;
            if x == 0 {
                return Err(Error::parse(pos, "points are numbered from 1"));
            }
            images.push(x - 1);
            positions.push(pos);
            offset += token_end;
            rest = &rest[token_end..];
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for (&x, &pos) in images.iter().zip(&positions) {
            if x >= n {
                return Err(Error::parse(
                    pos,
                    format!("image {} out of range 1..={n}", x + 1),
                ));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::parse(pos, format!("image {} repeated", x + 1)));
            }
        }
        Ok(Permutation { images })
    }

    /// Cycle text if it contains `(`, one-line notation otherwise.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if text.contains('(') || text.trim().is_empty() {
            return Permutation::from_cycles(text, n);
        }
        let p = Permutation::from_one_line(text)?;
        if p.degree() != n {
            return Err(Error::parse(
                0,
                format!("expected {n} images, got {}", p.degree()),
            ));
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).sorted().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            write!(f, "({})", c.iter().map(|x| x + 1).join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyRep {
    sigma1: Permutation,
    sigma2: Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DessinStats {
    pub vertices: usize,
    pub edges: usize,
}

impl MonodromyRep {
    pub fn new(sigma1: Permutation, sigma2: Permutation) -> Result<Self> {
        if sigma1.degree() != sigma2.degree() {
            return Err(Error::domain(format!(
                "σ₁ acts on {} points but σ₂ on {}",
                sigma1.degree(),
                sigma2.degree()
            )));
        }
        if sigma1.degree() == 0 {
            return Err(Error::domain("degree must be positive"));
        }
        Ok(MonodromyRep { sigma1, sigma2 })
    }

    pub fn parse(sigma1: &str, sigma2: &str, n: usize) -> Result<Self> {
        MonodromyRep::new(
            Permutation::parse(sigma1, n)?,
            Permutation::parse(sigma2, n)?,
        )
    }

    pub fn degree(&self) -> usize {
        self.sigma1.degree()
    }

    pub fn sigma1(&self) -> &Permutation {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &Permutation {
        &self.sigma2
    }

    /// `(c₁, c₂)`.
    pub fn cycle_counts(&self) -> (usize, usize) {
        (self.sigma1.cycle_count(), self.sigma2.cycle_count())
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for y in [self.sigma1.apply(x), self.sigma2.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == n
    }

    fn require_transitive(&self) -> Result<()> {
        if self.is_transitive() {
            Ok(())
        } else {
            Err(Error::NotTransitive)
        }
    }

    /// `c₁ + c₂ = n + 1`.
    pub fn is_tree(&self) -> Result<bool> {
        self.require_transitive()?;
        let (c1, c2) = self.cycle_counts();
        Ok(c1 + c2 == self.degree() + 1)
    }

    /// `χ = -n + c₁ + c₂` of the covering surface over the twice-punctured
    /// disk, compactified over the punctures.
    pub fn euler_characteristic_disk(&self) -> Result<i64> {
        self.require_transitive()?;
        let (c1, c2) = self.cycle_counts();
        Ok(c1 as i64 + c2 as i64 - self.degree() as i64)
    }

    /// `c₃`, the cycle count of `(σ₂σ₁)⁻¹`.
    pub fn face_cycles(&self) -> usize {
        self.sigma1.then(&self.sigma2).inverse().cycle_count()
    }

    /// Gap between the Euler characteristic of the closed covering surface
    /// and the disk one. Equal to the face count.
    pub fn sphere_disk_euler_difference(&self) -> usize {
        self.face_cycles()
    }

    pub fn dessin_stats(&self) -> Result<DessinStats> {
        if !self.is_tree()? {
            return Err(Error::NotTree);
        }
        let (c1, c2) = self.cycle_counts();
        Ok(DessinStats {
            vertices: c1 + c2,
            edges: self.degree(),
        })
    }
}

/// Path-tree monodromy `σ₁ = (1 2)(3 4)…`, `σ₂ = (2 3)(4 5)…`.
pub fn chebyshev_monodromy(n: usize) -> Result<MonodromyRep> {
    if n == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    let swap_from = |start: usize| {
        let mut images: Vec<usize> = (0..n).collect();
        let mut i = start;
        while i + 1 < n {
            images.swap(i, i + 1);
            i += 2;
        }
        Permutation { images }
    };
    MonodromyRep::new(swap_from(0), swap_from(1))
}

/// Whether a bijection `ι` exists with `ι∘σᵢ⁽²⁾ = σᵢ⁽¹⁾∘ι` for both `i`.
pub fn are_equivalent(a: &MonodromyRep, b: &MonodromyRep) -> Result<bool> {
    let n = a.degree();
    if n > EQUIVALENCE_LIMIT {
        return Err(Error::SizeLimit {
            n,
            limit: EQUIVALENCE_LIMIT,
        });
    }
    if b.degree() != n {
        return Ok(false);
    }
    if a.sigma1.cycle_type() != b.sigma1.cycle_type()
        || a.sigma2.cycle_type() != b.sigma2.cycle_type()
    {
        return Ok(false);
    }
    // length of the σ₁- and σ₂-cycles through each point; ι must preserve both
    let signature = |rep: &MonodromyRep| -> Vec<(usize, usize)> {
        let len = |p: &Permutation| {
            let mut out = vec![0; n];
            for c in p.cycles() {
                for &x in &c {
                    out[x] = c.len();
                }
            }
            out
        };
        let (l1, l2) = (len(&rep.sigma1), len(&rep.sigma2));
        l1.into_iter().zip(l2).collect()
    };
    let sig_a = signature(a);
    let sig_b = signature(b);
    let mut iota = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(0, a, b, &sig_a, &sig_b, &mut iota, &mut used))
}

/// Backtracking over the image of point `x` of `b`. Once `ι(x)` is fixed the
/// relations force `ι` on the whole orbit, which is propagated eagerly.
fn extend(
    x: usize,
    a: &MonodromyRep,
    b: &MonodromyRep,
    sig_a: &[(usize, usize)],
    sig_b: &[(usize, usize)],
    iota: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = iota.len();
    let Some(x) = (x..n).find(|&y| iota[y] == usize::MAX) else {
        return true;
    };
    for y in 0..n {
        if used[y] || sig_a[y] != sig_b[x] {
            continue;
        }
        let saved_iota = iota.clone();
        let saved_used = used.clone();
        if propagate(x, y, a, b, iota, used) && extend(x + 1, a, b, sig_a, sig_b, iota, used) {
            return true;
        }
        *iota = saved_iota;
        *used = saved_used;
    }
    false
}

fn propagate(
    x: usize,
    y: usize,
    a: &MonodromyRep,
    b: &MonodromyRep,
    iota: &mut [usize],
    used: &mut [bool],
) -> bool {
    let mut stack = vec![(x, y)];
    while let Some((u, v)) = stack.pop() {
        if iota[u] != usize::MAX {
            if iota[u] != v {
                return false;
            }
            continue;
        }
        if used[v] {
            return false;
        }
        iota[u] = v;
        used[v] = true;
        stack.push((b.sigma1.apply(u), a.sigma1.apply(v)));
        stack.push((b.sigma2.apply(u), a.sigma2.apply(v)));
    }
    true
}

/// Every permutation of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (0..n)
        .permutations(n)
        .map(|images| Permutation { images })
        .collect()
}

/// Every transitive pair of degree `n`, in lexicographic order.
pub fn transitive_pairs(n: usize) -> Vec<MonodromyRep> {
    let perms = all_permutations(n);
    let mut out = Vec::new();
    for s1 in &perms {
        for s2 in &perms {
            let rep = MonodromyRep {
                sigma1: s1.clone(),
                sigma2: s2.clone(),
            };
            if rep.is_transitive() {
                out.push(rep);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(s1: &str, s2: &str, n: usize) -> MonodromyRep {
        MonodromyRep::parse(s1, s2, n).unwrap()
    }

    #[test]
    fn transitivity() {
        assert!(!rep("()", "()", 2).is_transitive());
        assert!(rep("(1 2)", "(2 3)", 3).is_transitive());
        assert!(rep("", "", 1).is_transitive());
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(Permutation::identity(4).cycle_count(), 4);
        assert_eq!(
            Permutation::from_cycles("(1 2)(3 4)", 4)
                .unwrap()
                .cycle_count(),
            2
        );
        assert_eq!(
            Permutation::from_cycles("(1 2 3)", 5)
                .unwrap()
                .cycle_count(),
            3
        );
    }

    #[test]
    fn trees() {
        assert_eq!(rep("(1 2)", "(2 3)", 3).is_tree(), Ok(true));
        assert_eq!(rep("", "", 1).is_tree(), Ok(true));
        assert_eq!(rep("(1 2 3)", "(1 3 2)", 3).is_tree(), Ok(false));
        assert_eq!(rep("()", "()", 2).is_tree(), Err(Error::NotTransitive));
    }

    #[test]
    fn equivalence() {
        let a = rep("(1 2)", "(2 3)", 3);
        assert_eq!(are_equivalent(&a, &a), Ok(true));
        // conjugate by (1 3)
        let b = rep("(2 3)", "(1 2)", 3);
        assert_eq!(are_equivalent(&a, &b), Ok(true));
        let c = rep("(1 2 3)", "()", 3);
        assert_eq!(are_equivalent(&a, &c), Ok(false));
        // same cycle types but different structure
        let d = rep("(1 2)", "(1 2)", 3);
        let e = rep("(1 2)", "(2 3)", 3);
        assert_eq!(are_equivalent(&d, &e), Ok(false));
        let big = chebyshev_monodromy(11).unwrap();
        assert!(matches!(
            are_equivalent(&big, &big),
            Err(Error::SizeLimit { n: 11, .. })
        ));
    }

    #[test]
    fn equivalence_finds_conjugator() {
        let a = chebyshev_monodromy(7).unwrap();
        let iota = Permutation::from_one_line("3 7 1 5 2 6 4").unwrap();
        let conj = |p: &Permutation| iota.inverse().then(p).then(&iota);
        let b = MonodromyRep::new(conj(a.sigma1()), conj(a.sigma2())).unwrap();
        assert_eq!(are_equivalent(&a, &b), Ok(true));
    }

    #[test]
    fn euler_characteristic() {
        assert_eq!(rep("(1 2)", "(2 3)", 3).euler_characteristic_disk(), Ok(1));
        assert_eq!(
            rep("(1 2 3)", "(1 3 2)", 3).euler_characteristic_disk(),
            Ok(-1)
        );
        assert_eq!(rep("", "", 1).euler_characteristic_disk(), Ok(1));
    }

    #[test]
    fn faces() {
        assert_eq!(chebyshev_monodromy(3).unwrap().face_cycles(), 1);
        assert_eq!(rep("()", "()", 4).face_cycles(), 4);
        assert_eq!(rep("(1 2 3)", "(1 3 2)", 3).face_cycles(), 3);
        assert_eq!(
            rep("(1 2 3)", "(1 3 2)", 3).sphere_disk_euler_difference(),
            3
        );
    }

    #[test]
    fn chebyshev_chains() {
        let r2 = chebyshev_monodromy(2).unwrap();
        assert_eq!(r2.sigma1().to_string(), "(1 2)");
        assert!(r2.sigma2().is_identity());
        assert_eq!(r2.is_tree(), Ok(true));
        let r3 = chebyshev_monodromy(3).unwrap();
        assert_eq!(
            (r3.sigma1().to_string(), r3.sigma2().to_string()),
            ("(1 2)".into(), "(2 3)".into())
        );
        let r1 = chebyshev_monodromy(1).unwrap();
        assert!(r1.sigma1().is_identity() && r1.is_tree().unwrap());
    }

    #[test]
    fn dessins() {
        for (n, v) in [(5, 6), (1, 2), (8, 9)] {
            let s = chebyshev_monodromy(n).unwrap().dessin_stats().unwrap();
            assert_eq!(
                s,
                DessinStats {
                    vertices: v,
                    edges: n
                }
            );
        }
        assert_eq!(
            rep("(1 2 3)", "(1 3 2)", 3).dessin_stats(),
            Err(Error::NotTree)
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            Permutation::from_cycles("(1 2)(2 3)", 3),
            Err(Error::Parse {
                position: 6,
                message: "point 2 appears twice".into()
            })
        );
        assert!(matches!(
            Permutation::from_cycles("(1 5)", 4),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            Permutation::from_one_line("2 1 1"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(
            Permutation::from_one_line("2 x"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            Permutation::from_cycles("(1 2", 3),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(Permutation::parse("2 1", 3).is_err());
    }

    #[test]
    fn one_line_and_cycles_agree() {
        let a = Permutation::from_one_line("2 1 4 3").unwrap();
        let b = Permutation::from_cycles("(1 2)(3 4)", 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(1 2)(3 4)");
    }

    #[test]
    fn small_enumeration() {
        assert_eq!(all_permutations(3).len(), 6);
        // transitive pairs in S_2: any pair with at least one transposition
        assert_eq!(transitive_pairs(2).len(), 3);
    }
}
