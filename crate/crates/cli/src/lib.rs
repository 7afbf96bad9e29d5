//! Ring-file parsing, reports and the built-in acceptance corpus behind the
//! `socle` command line tool.

pub mod commands;
pub mod corpus;
pub mod parse;
pub mod report;
pub mod selftest;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    CheckFailed = 1,
    Usage = 2,
    Inconsistent = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// The more severe of two outcomes.
    pub fn worst(self, other: Exit) -> Exit {
        let rank = |e: Exit| match e {
            Exit::Success => 0,
            Exit::CheckFailed => 1,
            Exit::Inconsistent => 2,
            Exit::Usage => 3,
        };
        if rank(other) > rank(self) { other } else { self }
    }
}
