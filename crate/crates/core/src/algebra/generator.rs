//! The fifteen basis generators and the Minkowski metric helpers.

use std::fmt;

/// Basis generators in their fixed serialization order: the six Lorentz
/// generators `F_ij` (i < j), momenta `p_i`, coordinates `x_i`, and `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    F01,
    F02,
    F03,
    F12,
    F13,
    F23,
    P0,
    P1,
    P2,
    P3,
    X0,
    X1,
    X2,
    X3,
    Id,
}

pub const DIM: usize = 15;

use Generator::*;

pub const ALL: [Generator; DIM] = [
    F01, F02, F03, F12, F13, F23, P0, P1, P2, P3, X0, X1, X2, X3, Id,
];

/// Lorentz index pairs in generator order.
pub const LORENTZ_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl Generator {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Generator {
        ALL[i]
    }

    pub fn name(self) -> &'static str {
        const NAMES: [&str; DIM] = [
            "F01", "F02", "F03", "F12", "F13", "F23", "P0", "P1", "P2", "P3", "X0", "X1", "X2",
            "X3", "Id",
        ];
        NAMES[self.index()]
    }

    pub fn from_name(s: &str) -> Option<Generator> {
        ALL.iter().copied().find(|g| g.name() == s)
    }

    pub fn p(i: usize) -> Generator {
        ALL[6 + i]
    }

    pub fn x(i: usize) -> Generator {
        ALL[10 + i]
    }

    pub fn is_lorentz(self) -> bool {
        self.index() < 6
    }

    /// `F_ij` as `(sign, generator)`; `None` for `i == j`.
    pub fn lorentz(i: usize, j: usize) -> Option<(i64, Generator)> {
        if i == j {
            return None;
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let k = LORENTZ_PAIRS.iter().position(|&p| p == (a, b)).unwrap();
        Some((s, ALL[k]))
    }

    pub fn lorentz_indices(self) -> Option<(usize, usize)> {
        self.is_lorentz().then(|| LORENTZ_PAIRS[self.index()])
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `g = diag(1, -1, -1, -1)`.
pub fn metric(i: usize, j: usize) -> i64 {
    match (i, j) {
        (0, 0) => 1,
        (a, b) if a == b => -1,
        _ => 0,
    }
}

/// Sign of a permutation given as a slice of distinct indices; 0 on repeats.
pub fn permutation_sign(idx: &[usize]) -> i64 {
    let mut sign = 1;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] == idx[b] {
                return 0;
            }
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Levi-Civita symbol with lower indices, `eps_0123 = +1`.
pub fn levi_civita4(i: usize, j: usize, k: usize, l: usize) -> i64 {
    permutation_sign(&[i, j, k, l])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_names() {
        for (k, g) in ALL.iter().enumerate() {
            assert_eq!(g.index(), k);
            assert_eq!(Generator::from_name(g.name()), Some(*g));
        }
        assert_eq!(Generator::p(2), P2);
        assert_eq!(Generator::x(3), X3);
        assert_eq!(Generator::lorentz(2, 1), Some((-1, F12)));
        assert_eq!(Generator::lorentz(1, 1), None);
    }

    #[test]
    fn epsilon_convention() {
        assert_eq!(levi_civita4(0, 1, 2, 3), 1);
        assert_eq!(levi_civita4(1, 0, 2, 3), -1);
        assert_eq!(levi_civita4(3, 2, 1, 0), 1);
        assert_eq!(levi_civita4(0, 0, 2, 3), 0);
    }
}
