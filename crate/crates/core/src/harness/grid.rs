use std::fmt;

use thiserror::Error;

/// Default bound on the number of points in one grid.
pub const DEFAULT_POINT_CAP: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("syntax error at offset {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("empty range for {name}: {lo} > {hi}")]
    EmptyRange { name: String, lo: i64, hi: i64 },
    #[error("grid has {points} points, above the cap of {cap}")]
    CapExceeded { points: u128, cap: u64 },
    #[error("parameter {name} is not declared by {target}")]
    UnknownParameter { name: String, target: String },
}

/// Values taken by one parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Axis {
    /// Inclusive interval, `lo ≤ hi`.
    Range(i64, i64),
    List(Vec<i64>),
}

impl Axis {
    pub fn len(&self) -> u64 {
        match self {
            Axis::Range(lo, hi) => (*hi as i128 - *lo as i128 + 1) as u64,
            Axis::List(v) => v.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn values(&self) -> Vec<i64> {
        match self {
            Axis::Range(lo, hi) => (*lo..=*hi).collect(),
            Axis::List(v) => v.clone(),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Range(lo, hi) => write!(f, "{lo}..{hi}"),
            Axis::List(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

/// Named axes in a fixed order; points enumerate with the last axis fastest.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamGrid {
    axes: Vec<(String, Axis)>,
}

impl ParamGrid {
    pub fn new(axes: Vec<(String, Axis)>) -> Self {
        ParamGrid { axes }
    }

    pub fn axes(&self) -> &[(String, Axis)] {
        &self.axes
    }

    pub fn is_empty(&self) -> bool {
        self.axes.is_empty()
    }

    pub fn axis(&self, name: &str) -> Option<&Axis> {
        self.axes.iter().find(|(n, _)| n == name).map(|(_, a)| a)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.axes.iter().map(|(n, _)| n.as_str())
    }

    /// Product of the axis lengths; 1 for a grid without axes.
    pub fn point_count(&self) -> u128 {
        self.axes
            .iter()
            .fold(1u128, |acc, (_, a)| acc.saturating_mul(a.len() as u128))
    }

    /// All points in lexicographic order of the axes.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let values: Vec<Vec<i64>> = self.axes.iter().map(|(_, a)| a.values()).collect();
        if values.iter().any(Vec::is_empty) {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(self.point_count().min(1 << 24) as usize);
        let mut idx = vec![0usize; values.len()];
        loop {
            out.push(idx.iter().zip(&values).map(|(&i, v)| v[i]).collect());
            let mut k = values.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < values[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    /// Axes for `params` in that order, taken from `overrides` where present.
    pub fn overlay(&self, overrides: &ParamGrid, params: &[&str]) -> ParamGrid {
        let axes = params
            .iter()
            .filter_map(|&name| {
                overrides
                    .axis(name)
                    .or_else(|| self.axis(name))
                    .map(|a| (name.to_string(), a.clone()))
            })
            .collect();
        ParamGrid { axes }
    }

    pub fn check_cap(&self, cap: u64) -> Result<(), GridError> {
        let points = self.point_count();
        if points > cap as u128 {
            return Err(GridError::CapExceeded { points, cap });
        }
        Ok(())
    }
}

impl fmt::Display for ParamGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, axis)) in self.axes.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{name}={axis}")?;
        }
        Ok(())
    }
}

/// Parses `name=lo..hi` or `name=v1,v2,...` terms joined by `;`, with the
/// default point cap.
pub fn parse_grid(spec: &str) -> Result<ParamGrid, GridError> {
    parse_grid_with_cap(spec, DEFAULT_POINT_CAP)
}

pub fn parse_grid_with_cap(spec: &str, cap: u64) -> Result<ParamGrid, GridError> {
    let grid = Parser { src: spec, pos: 0 }.grid()?;
    grid.check_cap(cap)?;
    Ok(grid)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, GridError> {
        Err(GridError::SyntaxError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn grid(mut self) -> Result<ParamGrid, GridError> {
        let mut axes: Vec<(String, Axis)> = Vec::new();
        loop {
            self.skip_ws();
            let name_at = self.pos;
            let name = self.name()?;
            if axes.iter().any(|(n, _)| *n == name) {
                self.pos = name_at;
                return self.err(format!("duplicate parameter {name}"));
            }
            if !self.eat("=") {
                return self.err("expected '='");
            }
            let axis = self.axis(&name)?;
            axes.push((name, axis));
            self.skip_ws();
            if self.rest().is_empty() {
                return Ok(ParamGrid { axes });
            }
            if !self.eat(";") {
                return self.err("expected ';' or end of input");
            }
        }
    }

    fn name(&mut self) -> Result<String, GridError> {
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return self.err("expected a parameter name");
        }
        let name = rest[..len].to_string();
        self.pos += len;
        Ok(name)
    }

    fn int(&mut self) -> Result<i64, GridError> {
        self.skip_ws();
        let rest = self.rest();
        let sign = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected an integer");
        }
        let text = &rest[..sign + digits];
        match text.parse::<i64>() {
            Ok(v) => {
                self.pos += text.len();
                Ok(v)
            }
            Err(_) => self.err(format!("integer {text} out of range")),
        }
    }

    fn axis(&mut self, name: &str) -> Result<Axis, GridError> {
        let first = self.int()?;
        if self.eat("..") {
            let hi = self.int()?;
            if first > hi {
                return Err(GridError::EmptyRange {
                    name: name.to_string(),
                    lo: first,
                    hi,
                });
            }
            return Ok(Axis::Range(first, hi));
        }
        let mut vals = vec![first];
        while self.eat(",") {
            vals.push(self.int()?);
        }
        Ok(Axis::List(vals))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_range() {
        let g = parse_grid("n=0..5").unwrap();
        assert_eq!(g.axis("n").unwrap().values(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn counts_product() {
        let g = parse_grid("p=-3..3;q=0..2").unwrap();
        assert_eq!(g.point_count(), 21);
        assert_eq!(g.points().len(), 21);
        assert_eq!(g.points()[0], vec![-3, 0]);
        assert_eq!(g.points()[1], vec![-3, 1]);
        assert_eq!(g.points()[20], vec![3, 2]);
    }

    #[test]
    fn lists_and_whitespace() {
        let g = parse_grid(" lambda = -17, -8 ,-4 ; n=1").unwrap();
        assert_eq!(g.axis("lambda"), Some(&Axis::List(vec![-17, -8, -4])));
        assert_eq!(g.axis("n"), Some(&Axis::List(vec![1])));
    }

    #[test]
    fn empty_range() {
        assert_eq!(
            parse_grid("n=5..1"),
            Err(GridError::EmptyRange { name: "n".into(), lo: 5, hi: 1 })
        );
    }

    #[test]
    fn syntax_offsets() {
        let offset = |s: &str| match parse_grid(s) {
            Err(GridError::SyntaxError { offset, .. }) => offset,
            other => panic!("{s:?} gave {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset("n0..5"), 2);
        assert_eq!(offset("n=a"), 2);
        assert_eq!(offset("n=1..x"), 5);
        assert_eq!(offset("n=1;;"), 4);
        assert_eq!(offset("n=1;n=2"), 4);
        assert_eq!(offset("n=1 2"), 4);
        assert_eq!(offset("n=99999999999999999999"), 2);
    }

    #[test]
    fn cap() {
        assert!(matches!(
            parse_grid("a=1..1000;b=1..1001"),
            Err(GridError::CapExceeded { points: 1_001_000, cap: 1_000_000 })
        ));
        assert!(parse_grid_with_cap("a=1..10", 10).is_ok());
        assert!(parse_grid_with_cap("a=1..11", 10).is_err());
    }

    #[test]
    fn overlay_keeps_declared_order() {
        let base = parse_grid("p=-8..8;q=-8..8;n=0..20").unwrap();
        let over = parse_grid("n=1..1;p=0").unwrap();
        let g = base.overlay(&over, &["p", "q", "n"]);
        assert_eq!(g.to_string(), "p=0;q=-8..8;n=1..1");
    }

    fn arb_axis() -> impl Strategy<Value = Axis> {
        prop_oneof![
            (-50i64..50, 0i64..20).prop_map(|(lo, w)| Axis::Range(lo, lo + w)),
            prop::collection::vec(-1000i64..1000, 1..6).prop_map(Axis::List),
        ]
    }

    proptest! {
        #[test]
        fn display_round_trips(axes in prop::collection::btree_map("[a-z][a-z0-9_]{0,5}", arb_axis(), 1..5)) {
            let g = ParamGrid::new(axes.into_iter().collect());
            let text = g.to_string();
            prop_assert_eq!(parse_grid_with_cap(&text, u64::MAX).unwrap(), g);
        }

        #[test]
        fn point_count_matches_enumeration(axes in prop::collection::vec(arb_axis(), 1..4)) {
            let g = ParamGrid::new(axes.into_iter().enumerate().map(|(i, a)| (format!("v{i}"), a)).collect());
            prop_assert_eq!(g.points().len() as u128, g.point_count());
        }
    }
}
