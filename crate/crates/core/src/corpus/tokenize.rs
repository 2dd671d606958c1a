//! Rule-based tokenizer: Unicode lowercasing, whitespace splitting, and
//! punctuation detached into single-character tokens.
//!
//! The one refinement over a pure character-class split is that an
//! apostrophe (U+0027 or U+2019) surrounded by alphanumerics stays inside
//! the word, so contraction negators like "n't" and "don't" survive as
//! single tokens for the marker statistics. No stemming, no script-specific
//! rules.

/// Tokenize one line of raw text. Empty input yields an empty sequence.
pub fn tokenize(line: &str) -> Vec<String> {
    let lowered = line.to_lowercase();
    let chars: Vec<char> = lowered.chars().collect();
    let mut tokens = Vec::new();
    let mut current = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if c.is_alphanumeric() {
            current.push(c);
        } else if is_word_internal_apostrophe(&chars, i, c) {
            current.push(c);
        } else {
            if !current.is_empty() {
                tokens.push(std::mem::take(&mut current));
            }
            if !c.is_whitespace() {
                tokens.push(c.to_string());
            }
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

fn is_word_internal_apostrophe(chars: &[char], i: usize, c: char) -> bool {
    (c == '\'' || c == '\u{2019}')
        && i > 0
        && chars[i - 1].is_alphanumeric()
        && chars.get(i + 1).is_some_and(|n| n.is_alphanumeric())
}
