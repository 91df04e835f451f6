use thiserror::Error;
use zetalab::ComplexValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {text:?} as a complex number at position {position}: {message}")]
pub struct ParseError {
    pub text: String,
    /// Character offset in the original text.
    pub position: usize,
    pub message: String,
}

/// Parses `a`, `bi`, `a+bi` or `a-bi` with decimal `a`, `b`; whitespace is
/// ignored and a bare `i` means `1i`.
pub fn parse_complex(text: &str) -> Result<ComplexValue, ParseError> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let fail = |position: usize, message: &str| ParseError {
        text: text.to_string(),
        position,
        message: message.into(),
    };
    if chars.is_empty() {
        return Err(fail(0, "empty input"));
    }
    let compact: String = chars.iter().map(|(_, c)| *c).collect();
    let pos = |k: usize| {
        chars
            .get(k)
            .map(|(p, _)| *p)
            .unwrap_or(text.chars().count())
    };
    let number = |from: usize, to: usize| -> Result<f64, ParseError> {
        let slice: String = chars[from..to].iter().map(|(_, c)| *c).collect();
        let body = match slice.as_str() {
            "" | "+" => "1".to_string(),
            "-" => "-1".to_string(),
            s => s.to_string(),
        };
        let ok = body
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '+' | '-' | 'e' | 'E'));
        match body.parse::<f64>() {
            Ok(v) if ok && v.is_finite() => Ok(v),
            _ => Err(fail(pos(from), "expected a decimal number")),
        }
    };
    if !compact.ends_with('i') {
        if compact.contains('i') {
            return Err(fail(
                pos(compact.find('i').unwrap_or(0)),
                "imaginary unit must come last",
            ));
        }
        return Ok(ComplexValue::new(number(0, chars.len())?, 0.0));
    }
    let end = chars.len() - 1;
    // the sign that separates the parts is the last one not inside an exponent
    let split = (1..end).rev().find(|&k| {
        let c = chars[k].1;
        (c == '+' || c == '-') && !matches!(chars[k - 1].1, 'e' | 'E')
    });
    match split {
        Some(k) => Ok(ComplexValue::new(number(0, k)?, number(k, end)?)),
        None => Ok(ComplexValue::new(0.0, number(0, end)?)),
    }
}
