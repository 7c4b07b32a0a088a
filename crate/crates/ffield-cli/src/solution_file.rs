//! Structured text input for solutions of y^2 = u1^2 + lambda*u1 + u2 + 1.
//!
//! ```text
//! # comments start with '#'
//! lambda = 4
//! u1 = t
//! u2 = 3
//! y = t + 2
//! places = t, inf
//! ```
//!
//! Expressions use the shared grammar (variable t, operators + - * / ^).
//! If the place set lacks 0 or infinity, the solution is normalized by a
//! rational Moebius change of variable before validation.

use ffield::conic::{mobius_normalize, Solution};
use ffield::error::{Error, Result};
use ffield::expr::{parse_place_set, parse_ratfun};
use ffield::{Rat, RationalFunction};

pub struct SolutionFile {
    pub lambda: Rat,
    pub u1: RationalFunction,
    pub u2: RationalFunction,
    pub y: RationalFunction,
    pub places: ffield::PlaceSet,
}

pub fn parse_solution_file(text: &str) -> Result<SolutionFile> {
    let mut lambda = None;
    let mut u1 = None;
    let mut u2 = None;
    let mut y = None;
    let mut places = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse {
                offset: lineno,
                message: format!("line {}: expected 'field = expression'", lineno + 1),
            });
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "lambda" => {
                let f = parse_ratfun(value)?;
                lambda = Some(f.constant_value().ok_or_else(|| {
                    Error::InvalidInput("lambda must be a rational constant".into())
                })?);
            }
            "u1" => u1 = Some(parse_ratfun(value)?),
            "u2" => u2 = Some(parse_ratfun(value)?),
            "y" => y = Some(parse_ratfun(value)?),
            "places" => places = Some(parse_place_set(value)?),
            other => {
                return Err(Error::Parse {
                    offset: lineno,
                    message: format!("unknown field '{other}'"),
                })
            }
        }
    }
    let missing = |what: &str| Error::InvalidInput(format!("missing field '{what}'"));
    Ok(SolutionFile {
        lambda: lambda.ok_or_else(|| missing("lambda"))?,
        u1: u1.ok_or_else(|| missing("u1"))?,
        u2: u2.ok_or_else(|| missing("u2"))?,
        y: y.ok_or_else(|| missing("y"))?,
        places: places.ok_or_else(|| missing("places"))?,
    })
}

/// Validates the parsed fields into a Solution, normalizing the place set
/// when it lacks the points the derivation frame needs.
pub fn into_solution(file: SolutionFile) -> Result<Solution> {
    let direct = Solution::new(
        file.u1.clone(),
        file.u2.clone(),
        file.y.clone(),
        file.lambda.clone(),
        &file.places,
    );
    match direct {
        Ok(sol) => Ok(sol),
        Err(Error::InvalidFrame(_)) => {
            let (u1, u2, y, s) = mobius_normalize(&file.u1, &file.u2, &file.y, &file.places)?;
            Solution::new(u1, u2, y, file.lambda, &s)
        }
        Err(e) => Err(e),
    }
}
