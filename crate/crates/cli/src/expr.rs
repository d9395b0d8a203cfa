//! Element expressions: `[2,1]`, `(t+1)[1]*[1] - 3[2]`, `c1@(1,1)`, `k(1,0)`.

use hall_core::{HallError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub scalar: Option<String>,
    pub factors: Vec<String>,
}

fn err(s: &str, why: &str) -> HallError {
    HallError::Parse(format!("expression {s:?}: {why}"))
}

/// End of the bracketed group opening at `start`.
fn matching(chars: &[char], start: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (i, &c) in chars.iter().enumerate().skip(start) {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(err(s, "unbalanced brackets"));
        }
        if depth == 0 && (c == '+' || c == '-') && !(i > 0 && chars[i - 1] == '^') {
            if !cur.is_empty() {
                out.push((negative, std::mem::take(&mut cur)));
            } else if i > 0 {
                return Err(err(s, "empty term"));
            }
            negative = c == '-';
            continue;
        }
        cur.push(c);
    }
    if depth != 0 {
        return Err(err(s, "unbalanced brackets"));
    }
    if cur.is_empty() {
        return Err(err(s, "empty term"));
    }
    out.push((negative, cur));
    Ok(out)
}

fn parse_term(s: &str, negative: bool) -> Result<Term> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut scalar = None;
    if chars[0].is_ascii_digit() {
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
            i += 1;
        }
        scalar = Some(chars[..i].iter().collect::<String>());
    } else if chars[0] == '(' {
        let end = matching(&chars, 0).ok_or_else(|| err(s, "unbalanced parentheses"))?;
        scalar = Some(chars[1..end].iter().collect::<String>());
        i = end + 1;
    }
    if i < chars.len() && chars[i] == '*' {
        i += 1;
    }
    let mut factors = Vec::new();
    while i < chars.len() {
        let start = i;
        let open = chars[i..]
            .iter()
            .position(|&c| c == '(' || c == '[')
            .map(|p| p + i)
            .ok_or_else(|| err(s, "expected a bracketed label"))?;
        if chars[start..open].contains(&'*') {
            return Err(err(s, "misplaced '*'"));
        }
        let end = matching(&chars, open).ok_or_else(|| err(s, "unbalanced brackets"))?;
        factors.push(chars[start..=end].iter().collect::<String>());
        i = end + 1;
        if i < chars.len() {
            if chars[i] != '*' {
                return Err(err(s, "factors must be joined by '*'"));
            }
            i += 1;
            if i == chars.len() {
                return Err(err(s, "dangling '*'"));
            }
        }
    }
    if scalar.is_none() && factors.is_empty() {
        return Err(err(s, "empty term"));
    }
    Ok(Term {
        negative,
        scalar,
        factors,
    })
}

pub fn parse(s: &str) -> Result<Vec<Term>> {
    split_terms(s)?
        .into_iter()
        .map(|(neg, t)| parse_term(&t, neg))
        .collect()
}

/// Splits `a,b,c` at top-level commas.
pub fn split_top(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.is_empty() || !out.is_empty() {
        out.push(cur);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(neg: bool, s: Option<&str>, f: &[&str]) -> Term {
        Term {
            negative: neg,
            scalar: s.map(String::from),
            factors: f.iter().map(|x| x.to_string()).collect(),
        }
    }

    #[test]
    fn grammar() {
        assert_eq!(parse("[1]*[1]").unwrap(), vec![t(false, None, &["[1]", "[1]"])]);
        assert_eq!(
            parse("(t+1)[1,1] + [2]").unwrap(),
            vec![t(false, Some("t+1"), &["[1,1]"]), t(false, None, &["[2]"])]
        );
        assert_eq!(
            parse("-3*c1@(1,1) - 1/2 k(1,0)").unwrap(),
            vec![t(true, Some("3"), &["c1@(1,1)"]), t(true, Some("1/2"), &["k(1,0)"])]
        );
        assert_eq!(parse("2").unwrap(), vec![t(false, Some("2"), &[])]);
        assert_eq!(parse("I([1],[])").unwrap(), vec![t(false, None, &["I([1],[])"])]);
        assert!(parse("[1]*").is_err());
        assert!(parse("[1][1]").is_err());
        assert!(parse("[1").is_err());
        assert!(parse("").is_err());
        assert_eq!(split_top("[1],[2,1],[]"), vec!["[1]", "[2,1]", "[]"]);
    }
}
