#pragma once

#include "adjflow/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace adjflow {

inline constexpr std::string_view kToolName = "adjflow";
inline constexpr std::string_view kToolVersion = "0.1.0";

/** printf %.17g: 17 significant digits, enough to round-trip any double.
    NaN and infinities are rejected because reports must stay valid JSON. */
std::string format_double(double x);

/** 64-bit FNV-1a of the raw bytes, as 16 lowercase hex digits. */
std::string fnv1a_hex(std::string_view bytes);

/** Accumulates the raw bytes of every input a command consumed, in order,
    separated by NUL bytes, and digests them. */
class InputDigest {
public:
	void add(std::string_view bytes);
	std::string hex() const;

private:
	std::string data_;
	bool any_ = false;
};

/** Reads a whole file or throws InputError naming the path. */
std::string read_file(const std::string& path);

/** Minimal deterministic JSON emitter.  Keys are written in call order and
    doubles via format_double, so a report is byte-identical across runs. */
class JsonWriter {
public:
	void begin_object();
	void end_object();
	void begin_array();
	void end_array();
	void key(std::string_view name);
	void value(double x);
	void value(int x);
	void value(long long x);
	void value(bool x);
	void value(std::string_view text);
	void value(const char* text);

	void key_value(std::string_view name, double x);
	void key_value(std::string_view name, int x);
	void key_value(std::string_view name, long long x);
	void key_value(std::string_view name, bool x);
	void key_value(std::string_view name, std::string_view text);
	void key_value(std::string_view name, const char* text);

	const std::string& str() const { return out_; }

private:
	void separate();
	void indent();

	std::string out_;
	std::vector<bool> first_;
	bool pending_key_ = false;
};

void write_vector(JsonWriter& w, const Vector& v);
void write_matrix(JsonWriter& w, const Matrix& m);
void write_string_array(JsonWriter& w, const std::vector<std::string>& items);

/** Opens the standard report envelope: tool, version, command, input digest.
    The caller continues with command-specific keys and end_object(). */
void begin_report(JsonWriter& w, std::string_view command, const InputDigest& digest);

} // namespace adjflow
