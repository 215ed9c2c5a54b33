//! The type-checking monad: a `Result` whose error carries the rule that
//! failed and a rendered message.

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeError {
    pub rule: &'static str,
    pub message: String,
}

impl TypeError {
    pub fn new(rule: &'static str, message: impl Into<String>) -> Self {
        TypeError { rule, message: message.into() }
    }
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.message)
    }
}

pub type Tcm<T> = Result<T, TypeError>;

/// `type-error`.
pub fn type_error<T>(rule: &'static str, message: impl Into<String>) -> Tcm<T> {
    Err(TypeError::new(rule, message))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(n: u32) -> Tcm<u32> {
        if n.is_multiple_of(2) {
            Ok(n / 2)
        } else {
            type_error("half", "odd")
        }
    }

    #[test]
    #[allow(clippy::bind_instead_of_map)]
    fn monad_laws_on_samples() {
        for n in 0..20u32 {
            // left identity
            assert_eq!(Ok::<_, TypeError>(n).and_then(half), half(n));
            // right identity
            assert_eq!(half(n).and_then(Ok), half(n));
            // associativity
            assert_eq!(half(n).and_then(half).and_then(half), half(n).and_then(|m| half(m).and_then(half)));
        }
    }

    #[test]
    fn errors_short_circuit() {
        let e = half(3).and_then(|_| -> Tcm<u32> { panic!("not reached") });
        assert_eq!(e.unwrap_err().rule, "half");
    }
}
