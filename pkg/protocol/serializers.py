from rest_framework import serializers

from protocol.models import NoiseModel
from resources.serializers import ResourceReportSerializer


class NoiseModelSerializer(serializers.Serializer):
    p2q = serializers.FloatField(min_value=0, max_value=1, default=0.0)
    p1q = serializers.FloatField(min_value=0, max_value=1, default=0.0)
    ro = serializers.FloatField(min_value=0, max_value=1, default=0.0)

    def create(self, validated_data):
        return NoiseModel(**validated_data)


class ProtocolResultSerializer(serializers.Serializer):
    shots = serializers.IntegerField()
    seed = serializers.IntegerField(allow_null=True)
    theta = serializers.FloatField()
    noise = NoiseModelSerializer()
    frame_a = ResourceReportSerializer()
    frame_b = ResourceReportSerializer()
    invariant_delta = serializers.FloatField()
    flags = serializers.ListField(child=serializers.CharField())
    table = serializers.SerializerMethodField()

    def get_table(self, obj):
        return [
            {"frame": report.frame, "D2": report.D2_purity, "C2": report.C2, "total": report.sum_CD}
            for report in obj.reports
        ]


class RejectedPointSerializer(serializers.Serializer):
    lam = serializers.FloatField()
    reason = serializers.CharField()


class SweepRowSerializer(serializers.Serializer):
    lam = serializers.FloatField()
    reports = ResourceReportSerializer(many=True)


class SweepResultSerializer(serializers.Serializer):
    family = serializers.CharField()
    max_residual = serializers.FloatField(read_only=True)
    rows = SweepRowSerializer(many=True)
    rejected = RejectedPointSerializer(many=True)
    monotonicity = serializers.DictField()
