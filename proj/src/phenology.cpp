#include "ramosa/phenology.hpp"

#include "ramosa/csv.hpp"
#include "ramosa/errors.hpp"

#include <cstdio>
#include <fstream>

namespace ramosa {

// Civil-day conversions (proleptic Gregorian).
long long Date::serial() const {
    long long y = year;
    y -= month <= 2;
    long long era = (y >= 0 ? y : y - 399) / 400;
    long long yoe = y - era * 400;
    long long doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    long long doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

Date Date::from_serial(long long days) {
    long long z = days + 719468;
    long long era = (z >= 0 ? z : z - 146096) / 146097;
    long long doe = z - era * 146097;
    long long yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    long long y = yoe + era * 400;
    long long doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    long long mp = (5 * doy + 2) / 153;
    long long d = doy - (153 * mp + 2) / 5 + 1;
    long long m = mp + (mp < 10 ? 3 : -9);
    return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

Date Date::parse(const std::string& text) {
    int y, m, d;
    char tail;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3 || m < 1 || m > 12 ||
        d < 1 || d > 31) {
        throw DataError("bad date '" + text + "', expected YYYY-MM-DD");
    }
    return Date{y, m, d};
}

double daily_gdd(double tmin, double tmax, double tbase) {
    if (tmin > tmax) throw DataError("tmin exceeds tmax");
    double g = (tmax + tmin) / 2.0 - tbase;
    return g > 0.0 ? g : 0.0;
}

GddSeries accumulate(const std::vector<DailyWeather>& weather, double tbase) {
    if (weather.empty()) throw DataError("empty weather series");
    GddSeries series;
    series.start_date = weather.front().date;
    series.cumulative.reserve(weather.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < weather.size(); ++i) {
        if (i > 0 && weather[i].date <= weather[i - 1].date) {
            throw DataError("weather dates must be strictly increasing at " +
                            weather[i].date.to_string());
        }
        sum += daily_gdd(weather[i].tmin, weather[i].tmax, tbase);
        series.cumulative.push_back(sum);
    }
    return series;
}

std::vector<StageDate> stage_dates(const GddSeries& series, const std::vector<double>& targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] <= 0.0) throw DataError("stage targets must be positive");
        if (i > 0 && targets[i] <= targets[i - 1]) throw DataError("stage targets must ascend");
    }
    std::vector<StageDate> out;
    out.reserve(targets.size());
    for (double target : targets) {
        StageDate sd;
        sd.target = target;
        for (std::size_t day = 0; day < series.cumulative.size(); ++day) {
            if (series.cumulative[day] >= target) {
                sd.reached = true;
                sd.day_index = static_cast<int>(day);
                sd.date = series.date_at(day);
                break;
            }
        }
        out.push_back(sd);
    }
    return out;
}

std::vector<DailyWeather> load_weather_csv(const std::filesystem::path& path) {
    auto t = csv::read_file(path);
    int c_date = t.require_column("date");
    int c_tmin = t.require_column("tmin");
    int c_tmax = t.require_column("tmax");
    std::vector<DailyWeather> out;
    out.reserve(t.rows.size());
    for (auto& row : t.rows) {
        DailyWeather w;
        w.date = Date::parse(row[c_date]);
        w.tmin = csv::parse_double(row[c_tmin], "weather tmin");
        w.tmax = csv::parse_double(row[c_tmax], "weather tmax");
        if (w.tmin > w.tmax) throw DataError("tmin exceeds tmax on " + w.date.to_string());
        out.push_back(w);
    }
    return out;
}

void save_weather_csv(const std::vector<DailyWeather>& weather, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out << "date,tmin,tmax\n";
    for (auto& w : weather) {
        out << w.date.to_string() << ',' << csv::format_double(w.tmin) << ','
            << csv::format_double(w.tmax) << '\n';
    }
}

} // namespace ramosa
