#include "adjflow/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace adjflow {

std::string format_double(double x)
{
	if (!std::isfinite(x))
		throw Error("format_double: value is not finite");
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.17g", x);
	return buf;
}

std::string fnv1a_hex(std::string_view bytes)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : bytes) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

void InputDigest::add(std::string_view bytes)
{
	if (any_)
		data_.push_back('\0');
	data_.append(bytes);
	any_ = true;
}

std::string InputDigest::hex() const
{
	return fnv1a_hex(data_);
}

std::string read_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot open file: " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	if (in.bad())
		throw InputError("failed to read file: " + path);
	return buf.str();
}

void JsonWriter::separate()
{
	if (pending_key_) {
		pending_key_ = false;
		return;
	}
	if (!first_.empty()) {
		if (!first_.back())
			out_.push_back(',');
		first_.back() = false;
		out_.push_back('\n');
		indent();
	}
}

void JsonWriter::indent()
{
	out_.append(2 * first_.size(), ' ');
}

void JsonWriter::begin_object()
{
	separate();
	out_.push_back('{');
	first_.push_back(true);
}

void JsonWriter::end_object()
{
	const bool empty = first_.back();
	first_.pop_back();
	if (!empty) {
		out_.push_back('\n');
		indent();
	}
	out_.push_back('}');
}

void JsonWriter::begin_array()
{
	separate();
	out_.push_back('[');
	first_.push_back(true);
}

void JsonWriter::end_array()
{
	const bool empty = first_.back();
	first_.pop_back();
	if (!empty) {
		out_.push_back('\n');
		indent();
	}
	out_.push_back(']');
}

void JsonWriter::key(std::string_view name)
{
	separate();
	out_.push_back('"');
	out_.append(name);
	out_.append("\": ");
	pending_key_ = true;
}

void JsonWriter::value(double x)
{
	separate();
	out_.append(format_double(x));
}

void JsonWriter::value(int x)
{
	separate();
	out_.append(std::to_string(x));
}

void JsonWriter::value(long long x)
{
	separate();
	out_.append(std::to_string(x));
}

void JsonWriter::value(bool x)
{
	separate();
	out_.append(x ? "true" : "false");
}

void JsonWriter::value(std::string_view text)
{
	separate();
	out_.push_back('"');
	for (char c : text) {
		switch (c) {
		case '"': out_.append("\\\""); break;
		case '\\': out_.append("\\\\"); break;
		case '\n': out_.append("\\n"); break;
		case '\t': out_.append("\\t"); break;
		case '\r': out_.append("\\r"); break;
		default:
			if (static_cast<unsigned char>(c) < 0x20) {
				char buf[8];
				std::snprintf(buf, sizeof buf, "\\u%04x", c);
				out_.append(buf);
			} else {
				out_.push_back(c);
			}
		}
	}
	out_.push_back('"');
}

void JsonWriter::value(const char* text)
{
	value(std::string_view(text));
}

void JsonWriter::key_value(std::string_view name, double x)
{
	key(name);
	value(x);
}

void JsonWriter::key_value(std::string_view name, int x)
{
	key(name);
	value(x);
}

void JsonWriter::key_value(std::string_view name, long long x)
{
	key(name);
	value(x);
}

void JsonWriter::key_value(std::string_view name, bool x)
{
	key(name);
	value(x);
}

void JsonWriter::key_value(std::string_view name, std::string_view text)
{
	key(name);
	value(text);
}

void JsonWriter::key_value(std::string_view name, const char* text)
{
	key(name);
	value(std::string_view(text));
}

void write_vector(JsonWriter& w, const Vector& v)
{
	w.begin_array();
	for (Eigen::Index i = 0; i < v.size(); ++i)
		w.value(v(i));
	w.end_array();
}

void write_matrix(JsonWriter& w, const Matrix& m)
{
	w.begin_array();
	for (Eigen::Index i = 0; i < m.rows(); ++i) {
		w.begin_array();
		for (Eigen::Index j = 0; j < m.cols(); ++j)
			w.value(m(i, j));
		w.end_array();
	}
	w.end_array();
}

void write_string_array(JsonWriter& w, const std::vector<std::string>& items)
{
	w.begin_array();
	for (const auto& s : items)
		w.value(std::string_view(s));
	w.end_array();
}

void begin_report(JsonWriter& w, std::string_view command, const InputDigest& digest)
{
	w.begin_object();
	w.key_value("tool", kToolName);
	w.key_value("version", kToolVersion);
	w.key_value("command", command);
	w.key_value("input_digest", std::string_view(digest.hex()));
}

} // namespace adjflow
