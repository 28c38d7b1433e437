// SPDX-License-Identifier: Apache-2.0
#include "warc2md/unicode.hpp"

#include <array>

namespace warc2md::unicode {

std::vector<char32_t> decode_utf8(std::string_view bytes, std::size_t* invalid_bytes) {
    std::vector<char32_t> out;
    out.reserve(bytes.size());
    std::size_t bad = 0;
    std::size_t i = 0;
    const auto n = bytes.size();
    while (i < n) {
        const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len = 0;
        char32_t cp = 0;
        if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
        else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
        else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
        else {
            out.push_back(kReplacement);
            ++bad;
            ++i;
            continue;
        }
        bool ok = i + static_cast<std::size_t>(len) <= n;
        for (int k = 1; ok && k < len; ++k) {
            const unsigned char bk = static_cast<unsigned char>(bytes[i + static_cast<std::size_t>(k)]);
            if ((bk & 0xC0) != 0x80) ok = false;
            else cp = (cp << 6) | (bk & 0x3F);
        }
        if (ok) {
            // Reject overlong forms, surrogates and out-of-range values.
            static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
            if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) ok = false;
        }
        if (ok) {
            out.push_back(cp);
            i += static_cast<std::size_t>(len);
        } else {
            out.push_back(kReplacement);
            ++bad;
            ++i;
        }
    }
    if (invalid_bytes) *invalid_bytes = bad;
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacement;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size() * 2);
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

namespace {

// windows-1256 high half (0x80..0xFF) -> Unicode.
constexpr std::array<char32_t, 128> kCp1256High = {
    0x20AC, 0x067E, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0679, 0x2039, 0x0152, 0x0686, 0x0698, 0x0688,
    0x06AF, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x06A9, 0x2122, 0x0691, 0x203A, 0x0153, 0x200C, 0x200D, 0x06BA,
    0x00A0, 0x060C, 0x00A2, 0x00A3, 0x00A4, 0x00A5, 0x00A6, 0x00A7,
    0x00A8, 0x00A9, 0x06BE, 0x00AB, 0x00AC, 0x00AD, 0x00AE, 0x00AF,
    0x00B0, 0x00B1, 0x00B2, 0x00B3, 0x00B4, 0x00B5, 0x00B6, 0x00B7,
    0x00B8, 0x00B9, 0x061B, 0x00BB, 0x00BC, 0x00BD, 0x00BE, 0x061F,
    0x06C1, 0x0621, 0x0622, 0x0623, 0x0624, 0x0625, 0x0626, 0x0627,
    0x0628, 0x0629, 0x062A, 0x062B, 0x062C, 0x062D, 0x062E, 0x062F,
    0x0630, 0x0631, 0x0632, 0x0633, 0x0634, 0x0635, 0x0636, 0x00D7,
    0x0637, 0x0638, 0x0639, 0x063A, 0x0640, 0x0641, 0x0642, 0x0643,
    0x00E0, 0x0644, 0x00E2, 0x0645, 0x0646, 0x0647, 0x0648, 0x00E7,
    0x00E8, 0x00E9, 0x00EA, 0x00EB, 0x0649, 0x064A, 0x00EE, 0x00EF,
    0x064B, 0x064C, 0x064D, 0x064E, 0x00F4, 0x064F, 0x0650, 0x00F7,
    0x0651, 0x00F9, 0x0652, 0x00FB, 0x00FC, 0x200E, 0x200F, 0x06D2,
};

struct Range {
    char32_t lo;
    char32_t hi;
};

constexpr bool in_ranges(char32_t cp, const Range* ranges, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (cp >= ranges[i].lo && cp <= ranges[i].hi) return true;
    return false;
}

// Arabic-script letters: core block letters, supplements and presentation
// forms. Digits, tashkeel marks and Arabic punctuation are excluded.
constexpr Range kArabicLetters[] = {
    {0x0620, 0x063F},  // hamza forms .. ghain
    {0x0641, 0x064A},  // feh .. yeh
    {0x066E, 0x066F},  // dotless beh/qaf
    {0x0671, 0x06D3},  // alef wasla .. yeh barree with hamza
    {0x06D5, 0x06D5},
    {0x06EE, 0x06EF},
    {0x06FA, 0x06FF},
    {0x0750, 0x077F},  // Arabic Supplement
    {0x08A0, 0x08C9},  // Arabic Extended-A letters
    {0xFB50, 0xFBC1},  // presentation forms A
    {0xFDF0, 0xFDFB},
    {0xFE70, 0xFEF4},  // presentation forms B (skip ornate parens at FD3E/3F)
    {0xFEF5, 0xFEFC},  // lam-alef ligatures
};

constexpr Range kOtherLetters[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A},                    // ASCII
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x00FF},  // Latin-1
    {0x0100, 0x024F},                                      // Latin Extended A/B
    {0x0370, 0x0373}, {0x0376, 0x0377}, {0x037B, 0x037D},
    {0x0386, 0x0386}, {0x0388, 0x03FF},                    // Greek
    {0x0400, 0x04FF}, {0x0500, 0x052F},                    // Cyrillic
    {0x0531, 0x0556}, {0x0561, 0x0587},                    // Armenian
    {0x05D0, 0x05EA}, {0x05F0, 0x05F2},                    // Hebrew
    {0x0904, 0x0939}, {0x0958, 0x0961},                    // Devanagari
    {0x1E00, 0x1EFF},                                      // Latin Extended Additional
    {0x3041, 0x3096},                                      // Hiragana
    {0x30A1, 0x30FA},                                      // Katakana
    {0x4E00, 0x9FFF},                                      // CJK Unified
    {0xAC00, 0xD7A3},                                      // Hangul
};

constexpr Range kPunctuation[] = {
    {0x0021, 0x002F}, {0x003A, 0x0040}, {0x005B, 0x0060}, {0x007B, 0x007E},
    {0x00A1, 0x00A1}, {0x00AB, 0x00AB}, {0x00B7, 0x00B7}, {0x00BB, 0x00BB}, {0x00BF, 0x00BF},
    {0x060C, 0x060C},  // Arabic comma
    {0x061B, 0x061B},  // Arabic semicolon
    {0x061F, 0x061F},  // Arabic question mark
    {0x066A, 0x066D},  // percent, decimal/thousands separators, five-pointed star
    {0x06D4, 0x06D4},  // Arabic full stop
    {0x2010, 0x2027},  // dashes, quotes, bullets, ellipsis
    {0x2030, 0x205E},
};

}  // namespace

std::string cp1256_to_utf8(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size() * 2);
    for (char c : bytes) {
        const unsigned char b = static_cast<unsigned char>(c);
        if (b < 0x80) out.push_back(static_cast<char>(b));
        else append_utf8(out, kCp1256High[b - 0x80]);
    }
    return out;
}

bool is_arabic_letter(char32_t cp) {
    return in_ranges(cp, kArabicLetters, std::size(kArabicLetters));
}

bool is_letter(char32_t cp) {
    if (is_arabic_letter(cp)) return true;
    return in_ranges(cp, kOtherLetters, std::size(kOtherLetters));
}

bool is_digit(char32_t cp) {
    return (cp >= '0' && cp <= '9') || (cp >= 0x0660 && cp <= 0x0669) ||
           (cp >= 0x06F0 && cp <= 0x06F9);
}

bool is_whitespace(char32_t cp) {
    switch (cp) {
        case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
        case 0x00A0:  // no-break space
        case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
        case 0xFEFF:  // BOM / zero-width no-break
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;  // en quad .. hair space
    }
}

bool is_punctuation(char32_t cp) {
    return in_ranges(cp, kPunctuation, std::size(kPunctuation));
}

bool is_allowed_symbol(char32_t cp) {
    switch (cp) {
        case '.': case ',': case ':': case ';': case '!': case '?':
        case 0x060C: case 0x061B: case 0x061F:
        case '"': case '\'': case '(': case ')': case '-':
            return true;
        default:
            return false;
    }
}

}  // namespace warc2md::unicode
