import math

from rest_framework import serializers


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    residual = serializers.SerializerMethodField()
    tolerance = serializers.FloatField()
    passed = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)

    def get_residual(self, obj):
        # a check that raised has no residual; strict JSON has no inf
        return obj.residual if math.isfinite(obj.residual) else None


class VerificationReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    failures = serializers.ListField(child=serializers.CharField())
    checks = CheckResultSerializer(many=True)
