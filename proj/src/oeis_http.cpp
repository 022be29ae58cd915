#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "momentix/errors.hpp"
#include "momentix/oeis.hpp"

namespace momentix::oeis {

Transport default_transport() {
    return [](const std::string& url) {
        const std::size_t host_end = url.find('/', url.find("://") + 3);
        const std::string origin = url.substr(0, host_end);
        const std::string path = host_end == std::string::npos ? "/" : url.substr(host_end);

        httplib::Client client(origin);
        client.set_follow_location(true);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        const httplib::Headers headers{{"User-Agent", "momentix-oeis/0.1 (b-file fetcher)"}};
        auto result = client.Get(path, headers);
        if (!result) throw NetworkError("GET " + url + " failed: " + httplib::to_string(result.error()));
        return HttpResponse{result->status, result->body};
    };
}

}  // namespace momentix::oeis
