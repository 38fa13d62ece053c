#![no_main]

use cliffan::moebius::VahlenMatrix;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = VahlenMatrix::parse(3, text) {
        let again = VahlenMatrix::parse(3, &m.to_dsl()).expect("printed form parses");
        assert_eq!(again.to_dsl(), m.to_dsl());
        let _ = m.apply(&[0.25, -0.5, 1.0]);
    }
});
