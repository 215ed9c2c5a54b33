//! Two representations of the integers and the relation between them.

use core::fmt;

/// An integer as a difference `a - b` of natural numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiffNat(pub u64, pub u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

/// An integer as a sign and a magnitude; zero has two representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignNat(pub Sign, pub u64);

impl fmt::Display for DiffNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "pos",
            Sign::Neg => "neg",
        })
    }
}

impl fmt::Display for SignNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn parse(s: &str) -> Option<Sign> {
        match s {
            "pos" => Some(Sign::Pos),
            "neg" => Some(Sign::Neg),
            _ => None,
        }
    }
}

pub fn add_diff(x: DiffNat, y: DiffNat) -> DiffNat {
    DiffNat(x.0 + y.0, x.1 + y.1)
}

pub fn negate_diff(x: DiffNat) -> DiffNat {
    DiffNat(x.1, x.0)
}

pub fn add_sign(x: SignNat, y: SignNat) -> SignNat {
    let (SignNat(s, m), SignNat(t, n)) = (x, y);
    if s == t {
        SignNat(s, m + n)
    } else if m > n {
        SignNat(s, m - n)
    } else if n > m {
        SignNat(t, n - m)
    } else {
        SignNat(Sign::Pos, 0)
    }
}

pub fn negate_sign(x: SignNat) -> SignNat {
    SignNat(x.0.flip(), x.1)
}

/// `(a, b) ∼ (pos, n)` iff `a = b + n`, and `(a, b) ∼ (neg, n)` iff `b = a + n`.
pub fn related(d: &DiffNat, s: &SignNat) -> bool {
    match s.0 {
        Sign::Pos => d.0 == d.1 + s.1,
        Sign::Neg => d.1 == d.0 + s.1,
    }
}

/// All `SignNat`s related to `d`: one, or both zeros.
pub fn related_signnats(d: &DiffNat) -> impl Iterator<Item = SignNat> + '_ {
    [SignNat(Sign::Pos, 0), SignNat(Sign::Neg, 0)].into_iter().filter(move |s| related(d, s)).chain(
        [Sign::Pos, Sign::Neg]
            .into_iter()
            .map(move |sign| SignNat(sign, d.0.abs_diff(d.1)))
            .filter(move |s| s.1 > 0 && related(d, s)),
    )
}
