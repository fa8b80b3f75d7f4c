// io.cpp -- lossless number formatting and small file helpers.

#include "floquet/io.hpp"

#include <charconv>
#include <fstream>

namespace flq {

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw Error(ErrorKind::Numerical, "format_double: conversion failed");
    return std::string(buf, p);
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

double parse_double(std::string_view s, const std::string& context) {
    const std::string t = trim(s);
    double v = 0.0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty())
        throw Error(ErrorKind::Validation, context + ": bad number '" + std::string(s) + "'");
    return v;
}

long parse_int(std::string_view s, const std::string& context) {
    const std::string t = trim(s);
    long v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty())
        throw Error(ErrorKind::Validation, context + ": bad integer '" + std::string(s) + "'");
    return v;
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == delim) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorKind::Config, "cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

} // namespace flq
