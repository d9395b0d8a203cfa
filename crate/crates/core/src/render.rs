//! Shared text rendering of linear combinations.

/// True when a rendered coefficient is a sum and needs parentheses before a basis symbol.
fn is_compound(coeff: &str) -> bool {
    coeff
        .char_indices()
        .any(|(i, c)| i > 0 && (c == '+' || c == '-') && !coeff[..i].ends_with('^'))
}

/// Renders one `coefficient·basis` term. An empty basis means a bare scalar.
pub fn term(coeff: &str, basis: &str) -> String {
    if basis.is_empty() {
        return coeff.to_string();
    }
    match coeff {
        "1" => basis.to_string(),
        "-1" => format!("-{basis}"),
        c if is_compound(c) => format!("({c}){basis}"),
        c if basis.starts_with(|b: char| b.is_ascii_alphabetic()) => format!("{c}·{basis}"),
        c => format!("{c}{basis}"),
    }
}

/// Joins rendered terms with ` + ` / ` - `; `0` for an empty sum.
pub fn join_terms<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_and_sums() {
        assert_eq!(term("1", "[2]"), "[2]");
        assert_eq!(term("-1", "[1]"), "-[1]");
        assert_eq!(term("t+1", "[1,1]"), "(t+1)[1,1]");
        assert_eq!(term("-t^-1", "[2]"), "-t^-1[2]");
        assert_eq!(term("1-t^-1", "[1]"), "(1-t^-1)[1]");
        assert_eq!(term("3", ""), "3");
        assert_eq!(term("1/2v", "c0@(1,1)"), "1/2v·c0@(1,1)");
        assert_eq!(
            join_terms(vec!["(t+1)[1,1]".into(), "[2]".into()]),
            "(t+1)[1,1] + [2]"
        );
        assert_eq!(join_terms(vec!["a".into(), "-b".into()]), "a - b");
        assert_eq!(join_terms(Vec::<String>::new()), "0");
    }
}
